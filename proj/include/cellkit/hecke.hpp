// The Iwahori-Hecke algebra of S_n over A = Z[v, v^-1]: the standard basis
// T_w with T_s^2 = T_1 + (v - v^-1) T_s, the involutions j, dagger, bar and
// flat, Kazhdan-Lusztig polynomials, the bases C'_w and C_w, and the
// structure constants h_{x,y,z} of C'_x C'_y = sum_z h_{x,y,z} C'_z.
#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cellkit/group.hpp"
#include "cellkit/laurent.hpp"

namespace cellkit {

enum class Basis { T, Cprime, C };

std::string basis_name(Basis b);  // "T", "C'", "C"

/// Element of H written in one of the three bases.  Coefficients are kept
/// densely, indexed by the group's element index.
class HeckeElt {
public:
    HeckeElt() = default;
    HeckeElt(GroupPtr group, Basis basis);
    static HeckeElt basis_element(GroupPtr group, Basis basis, int w, Laurent coeff = 1);

    const GroupPtr& group() const noexcept { return group_; }
    int n() const { return group_->n(); }
    Basis basis() const noexcept { return basis_; }

    const Laurent& coeff(int w) const { return coeffs_[static_cast<size_t>(w)]; }
    const Laurent& coeff(const Perm& w) const { return coeff(group_->index_of(w)); }
    Laurent& coeff_ref(int w) { return coeffs_[static_cast<size_t>(w)]; }
    const std::vector<Laurent>& coeffs() const noexcept { return coeffs_; }
    std::vector<Laurent>& coeffs() noexcept { return coeffs_; }

    bool is_zero() const;
    /// Indices with nonzero coefficient, increasing.
    std::vector<int> support() const;

    HeckeElt& operator+=(const HeckeElt& rhs);
    HeckeElt& operator-=(const HeckeElt& rhs);
    HeckeElt& operator*=(const Laurent& c);
    friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
    friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
    friend HeckeElt operator*(const Laurent& c, HeckeElt a) { return a *= c; }
    friend bool operator==(const HeckeElt& a, const HeckeElt& b);

    /// "v*T[2,1,3] + ...", terms in index order; "0" for zero.
    std::string to_string() const;

private:
    void check_compatible(const HeckeElt& rhs) const;

    GroupPtr group_;
    Basis basis_ = Basis::T;
    std::vector<Laurent> coeffs_;
};

/// T_s h and h T_s for an element in the T-basis.
HeckeElt t_left_mul(int i, const HeckeElt& h);
HeckeElt t_right_mul(const HeckeElt& h, int i);
/// Product of two T-basis elements.
HeckeElt t_mul(const HeckeElt& a, const HeckeElt& b);

enum class Involution { j, dagger, bar, flat };

/// Applies an involution to a T-basis element.  j, dagger and bar are ring
/// automorphisms (j and dagger A-linear, bar semilinear); flat is the A-linear
/// anti-automorphism T_w -> T_{w^-1}.
HeckeElt apply_involution(const HeckeElt& h, Involution kind);

/// T-expansion of bar(T_w) = T_{w^-1}^{-1}.
HeckeElt bar_of_T(GroupPtr group, int w);

/// Kazhdan-Lusztig polynomials p_{y,w} (y <= w, p_{w,w} = 1) and the
/// mu-values, the coefficient of v^-1 in p_{y,w} for y < w.
class KLTable {
public:
    enum class Descent { first, last };

    /// Builds C'_w by the C'_s-multiplication recursion, choosing s as the
    /// smallest (or largest) left descent.
    static std::shared_ptr<KLTable> build(int n, Descent choice = Descent::first);
    /// Assembles a table from stored polynomials p[w][y] (used by the cache).
    static std::shared_ptr<KLTable> from_polynomials(int n, std::vector<std::vector<Laurent>> p);

    const GroupPtr& group() const noexcept { return group_; }
    int n() const { return group_->n(); }

    /// p_{y,w}; zero unless y <= w in Bruhat order.
    const Laurent& p(int y, int w) const { return p_[static_cast<size_t>(w)][static_cast<size_t>(y)]; }
    /// The T-coefficients of C'_w.
    const std::vector<Laurent>& column(int w) const { return p_[static_cast<size_t>(w)]; }
    int mu(int y, int w) const;
    /// Pairs (z, mu(z,w)) with z < w and mu nonzero, z increasing.
    const std::vector<std::pair<int, int>>& mu_list(int w) const { return mu_[static_cast<size_t>(w)]; }

    /// Overrides a single mu-value; only the mu lists change, not p.
    /// Testing hook for checking that verifiers notice corrupted input.
    void inject_mu(int y, int w, int value);

    friend bool operator==(const KLTable& a, const KLTable& b) { return a.p_ == b.p_ && a.mu_ == b.mu_; }

private:
    KLTable() = default;
    void rebuild_mu();

    GroupPtr group_;
    std::vector<std::vector<Laurent>> p_;
    std::vector<std::vector<std::pair<int, int>>> mu_;
};

using KLTablePtr = std::shared_ptr<const KLTable>;

/// T-expansion of C'_w or C_w (kind must be Cprime or C).
HeckeElt kl_element(int w, Basis kind, const KLTable& table);

/// Re-expresses h in the target basis.
HeckeElt convert_basis(const HeckeElt& h, Basis target, const KLTable& table);

/// Product of two elements; the result is in the basis of a.
HeckeElt mul(const HeckeElt& a, const HeckeElt& b, const KLTable& table);

/// C'_s times an element given by its C'-coefficients, using the rule
/// C'_s C'_y = C'_{sy} + sum_{sz<z<y} mu(z,y) C'_z (sy > y), (v+v^-1) C'_y (sy < y).
/// out must have the group's size and is overwritten.
void cprime_left_mul(int i, const std::vector<Laurent>& in, std::vector<Laurent>& out, const KLTable& table);

/// z -> h_{x,y,z} for all z, computed through the T-basis.
std::vector<Laurent> h_constants(int x, int y, const KLTable& table);
/// z -> h_{s_i,y,z} from the multiplication rule.
std::vector<Laurent> h_s_row(int i, int y, const KLTable& table);

/// The T_1-coefficient.
Laurent tau(const HeckeElt& h);

}  // namespace cellkit
