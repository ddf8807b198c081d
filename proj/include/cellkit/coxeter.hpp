// Combinatorics of the symmetric group S_n with generators s_i = (i, i+1):
// permutations, Bruhat order, partitions, Young subgroups and their
// distinguished coset representatives, standard tableaux, and the
// Robinson-Schensted correspondence.
//
// Conventions: permutations act on the left of {1..n}; one-line notation
// lists w(1), ..., w(n); products compose as functions, (xy)(k) = x(y(k)).
#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "cellkit/laurent.hpp"

namespace cellkit {

class Perm {
public:
    Perm() = default;
    /// One-line notation with values 1..n; throws std::invalid_argument if not a bijection.
    explicit Perm(std::vector<int> images);

    static Perm identity(int n);
    /// The simple reflection s_i, 1 <= i < n.
    static Perm simple(int n, int i);
    /// Product s_{w[0]} s_{w[1]} ... of simple reflections.
    static Perm from_word(int n, const std::vector<int>& word);
    /// Parses "[3,2,1,4]" or a word such as "s1 s2 s1" / "s1s2s1" / "1" (identity).
    /// Words need n; one-line input must agree with n when n > 0.
    static Perm parse(std::string_view text, int n = 0);

    int n() const noexcept { return static_cast<int>(images_.size()); }
    int operator()(int k) const { return images_[static_cast<size_t>(k - 1)]; }
    const std::vector<int>& images() const noexcept { return images_; }

    int length() const;
    int sign() const { return length() % 2 == 0 ? 1 : -1; }
    Perm inverse() const;
    /// Indices i with l(w s_i) < l(w), i.e. w(i) > w(i+1).
    std::vector<int> right_descents() const;
    /// Indices i with l(s_i w) < l(w).
    std::vector<int> left_descents() const;
    bool has_right_descent(int i) const { return images_[static_cast<size_t>(i - 1)] > images_[static_cast<size_t>(i)]; }
    bool has_left_descent(int i) const;
    /// Lexicographically smallest reduced word (as generator indices).
    std::vector<int> reduced_word() const;

    friend Perm operator*(const Perm& x, const Perm& y);
    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm& a, const Perm& b) { return a.images_ <=> b.images_; }

    /// "[3,2,1,4]"
    std::string to_string() const;
    /// "s1s2s1", or "1" for the identity.
    std::string word_string() const;

private:
    std::vector<int> images_;
};

std::ostream& operator<<(std::ostream& os, const Perm& w);

/// Length-then-lexicographic order on one-line notation.
bool length_lex_less(const Perm& a, const Perm& b);

/// Bruhat order via the subword property on the lexicographically first reduced word of w.
bool bruhat_leq(const Perm& y, const Perm& w);

class Partition {
public:
    Partition() = default;
    /// Parts must be positive; they are sorted into weakly decreasing order.
    explicit Partition(std::vector<int> parts);
    /// "3,1" or "(3,1)".
    static Partition parse(std::string_view text);
    /// All partitions of n, in reverse lexicographic order starting with (n).
    static std::vector<Partition> all(int n);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const;
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    Partition conjugate() const;
    /// lambda_1 + ... + lambda_i (i may exceed the number of parts).
    int partial_sum(int i) const;
    /// Dominance: *this ⊴ other.
    bool dominated_by(const Partition& other) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

    /// "(3,1)"
    std::string to_string() const;
    /// "3,1"
    std::string to_csv() const;

private:
    std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// A standard (or row-standard) tableau stored row by row.
class Tableau {
public:
    Tableau() = default;
    explicit Tableau(std::vector<std::vector<int>> rows);
    /// "[[1,2,3],[4]]"
    static Tableau parse(std::string_view text);
    /// The row-reading tableau t^lambda with 1..lambda_1 in the first row, etc.
    static Tableau initial(const Partition& shape);

    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
    Partition shape() const;
    int size() const;
    bool is_standard() const;
    bool is_row_standard() const;
    Tableau transpose() const;
    /// (w.t)(i,j) = w(t(i,j)).
    Tableau acted_on_by(const Perm& w) const;

    friend bool operator==(const Tableau&, const Tableau&) = default;
    friend auto operator<=>(const Tableau& a, const Tableau& b) { return a.rows_ <=> b.rows_; }
    std::string to_string() const;

private:
    std::vector<std::vector<int>> rows_;
};

std::ostream& operator<<(std::ostream& os, const Tableau& t);

struct YoungData {
    Partition lambda;
    std::vector<int> generators;  // I_lambda, as indices into s_1..s_{n-1}
    Perm longest;                 // w_lambda
    Laurent poincare;             // P_lambda = sum over the Young subgroup of v^{2 l(w)}
};

YoungData young_data(const Partition& lambda);

/// Elements of the Young subgroup S_lambda, in length-lex order.
std::vector<Perm> young_subgroup(const Partition& lambda);

struct CosetDecomposition {
    Perm x;  // distinguished left coset representative
    Perm u;  // element of the Young subgroup, w = x u
};

CosetDecomposition coset_decompose(const Perm& w, const Partition& lambda);
/// X_lambda sorted by (length, one-line).
std::vector<Perm> coset_reps(const Partition& lambda);
bool is_coset_rep(const Perm& w, const Partition& lambda);

/// Standard lambda-tableaux sorted by (l(d(t)), one-line of d(t)); t^lambda first.
std::vector<Tableau> std_tableaux(const Partition& lambda);
/// The unique d in X_lambda with d.t^lambda = t (t row-standard).
Perm d_of_tableau(const Tableau& t);

/// Number of standard tableaux of the given shape by the hook length formula.
long long hook_length_count(const Partition& lambda);

struct RskResult {
    Partition shape;
    Tableau insertion;  // P
    Tableau recording;  // Q
};

/// Row insertion of w(1), ..., w(n).
RskResult rsk(const Perm& w);
/// Inverse of rsk; throws std::invalid_argument on shape mismatch or non-standard input.
Perm rsk_inverse(const Tableau& insertion, const Tableau& recording);

}  // namespace cellkit
