// Murphy's basis of H, the two-sided ideals N^lambda, the index map
// w_lambda(i,j) read off from cell intersections, the elements Z_w, and the
// expansion of Murphy elements in the C-basis.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cellkit/cells.hpp"

namespace cellkit {

struct TableauPair {
    Tableau s;
    Tableau t;
    Partition shape() const { return s.shape(); }
};

enum class MurphyVariant { x, y };

/// x_st = T_{d(s)} x_lambda T_{d(t)^-1} or y~_st = T_{d(s)} C_{w_lambda} T_{d(t)^-1}, T-basis.
HeckeElt murphy_element(const TableauPair& pair, MurphyVariant variant, const KLTable& table);
/// x_lambda = sum over the Young subgroup of v^{l(w)} T_w.
HeckeElt x_lambda(const Partition& lambda, GroupPtr group);

/// lambda_w: the conjugate of the RSK shape of w.
Partition shape_of(const Perm& w);

struct IdealBasis {
    Partition lambda;
    std::vector<TableauPair> murphy;  // pairs of shape mu with lambda ⊴ mu
    std::vector<int> kl;              // w with lambda ⊴ lambda_w
};

IdealBasis ideal_basis(const Partition& lambda, const KLTable& table);
/// First C-basis support element w of h with lambda not ⊴ lambda_w, if any.
std::optional<int> ideal_violation(const HeckeElt& h, const Partition& lambda, const KLTable& table);

/// Cell-intersection realization of w_lambda(i,j); indices are 0-based.
struct IndexMap {
    Partition lambda;
    std::vector<Tableau> tableaux;      // canonical order, t^lambda first
    std::vector<int> x;                 // x_i = d(t_i)
    std::vector<std::vector<int>> grid; // grid[i][j]
    int longest = 0;                    // w_lambda

    int dim() const { return static_cast<int>(x.size()); }
    /// Position of w in the grid, if present.
    std::optional<std::pair<int, int>> locate(int w) const;
    /// Index of a standard tableau in the canonical order; throws if absent.
    int tableau_index(const Tableau& t) const;
};

/// grid(i,j) is the unique element of (right cell of x_i w_lambda) ∩
/// (left cell of w_lambda x_j^-1); throws std::logic_error otherwise.
IndexMap index_map(const Partition& lambda, const KLTable& table, const CellPartition& left, const CellPartition& right);

/// Z_w = (1/P_lambda) eps_{w_lambda} v^{l(w_lambda)} C_{x_i w_lambda} C_{w_lambda x_j^-1}
/// in the C-basis.  Throws DivisionFailure when a coefficient is not divisible.
HeckeElt z_element(int w, const IndexMap& imap, const KLTable& table);

/// Raised when a C-expansion does not have the expected triangular shape.
class ClassificationError : public std::logic_error {
public:
    ClassificationError(const std::string& what, int element) : std::logic_error(what), element(element) {}
    int element;
};

struct BaseChange {
    TableauPair pair;
    int i = 0, j = 0;
    int leading = 0;
    std::vector<std::pair<int, Laurent>> same_shape;  // coefficients in vZ[v]
    std::vector<std::pair<int, Laurent>> higher;      // shapes strictly dominating lambda
    HeckeElt expansion;                                // y~_st in the C-basis
};

/// Expands y~_st in the C-basis and classifies its terms.  The leading
/// element must carry coefficient 1 and equal grid(i,j).
BaseChange base_change(const TableauPair& pair, const IndexMap& imap, const KLTable& table);

/// Determinant by fraction-free elimination with exact division.
Laurent bareiss_determinant(LaurentMatrix m);
/// +-v^k.
bool is_unit(const Laurent& p);

/// Checks that the Murphy elements y~_st of shapes mu ⊵ lambda lie in N^lambda
/// and span the same A-module as its C-basis; returns the failure, if any.
std::optional<std::string> check_equal_span(const Partition& lambda, const KLTable& table);

}  // namespace cellkit
