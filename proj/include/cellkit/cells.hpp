// Kazhdan-Lusztig preorders and cells, the star operation, left cell
// modules and their characters.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cellkit/hecke.hpp"

namespace cellkit {

enum class Side { left, right, two };

std::string side_name(Side side);  // "left", "right", "two"

/// The preorder <=_L, <=_R or <=_LR as an explicit reachability table.
class Preorder {
public:
    Preorder(const KLTable& table, Side side);

    Side side() const noexcept { return side_; }
    const GroupPtr& group() const noexcept { return group_; }
    /// x <= y.
    bool leq(int x, int y) const { return reach_[static_cast<size_t>(y)][static_cast<size_t>(x)] != 0; }
    bool equiv(int x, int y) const { return leq(x, y) && leq(y, x); }
    /// Generating arrows y -> x (x directly below y), without loops.
    const std::vector<int>& arrows_from(int y) const { return arrows_[static_cast<size_t>(y)]; }

private:
    GroupPtr group_;
    Side side_;
    std::vector<std::vector<int>> arrows_;
    std::vector<std::vector<char>> reach_;
};

class CellPartition {
public:
    explicit CellPartition(const Preorder& order);

    Side side() const noexcept { return side_; }
    /// Cells ordered by their smallest element index; each cell sorted.
    const std::vector<std::vector<int>>& cells() const noexcept { return cells_; }
    int cell_of(int w) const { return cell_of_[static_cast<size_t>(w)]; }
    int count() const { return static_cast<int>(cells_.size()); }
    /// Induced partial order on cell indices: cell a <= cell b.
    bool leq(int a, int b) const { return leq_[static_cast<size_t>(a)][static_cast<size_t>(b)] != 0; }

private:
    Side side_;
    std::vector<std::vector<int>> cells_;
    std::vector<int> cell_of_;
    std::vector<std::vector<char>> leq_;
};

/// For adjacent s = s_i, t = s_{i+1}: w* if exactly one of s, t is a right
/// descent of w, otherwise nullopt.
std::optional<int> star_operation(const SymmetricGroup& g, int w, int i);

using LaurentMatrix = std::vector<std::vector<Laurent>>;

/// Raised when a set of elements does not carry a cell module.
class NotACellUnion : public std::invalid_argument {
public:
    NotACellUnion(const std::string& what, std::vector<int> witness)
        : std::invalid_argument(what), witness(std::move(witness)) {}
    std::vector<int> witness;
};

/// The module with basis b_x (x in the set) on which C_s acts through
/// C_s.b_x = -sum_y h_{s,x,y} b_y.
struct CellModule {
    GroupPtr group;
    std::vector<int> elements;
    /// gen[i-1][r][c]: coefficient of b_{elements[r]} in C_{s_i}.b_{elements[c]}.
    std::vector<LaurentMatrix> gen;

    int dim() const { return static_cast<int>(elements.size()); }
    /// Matrix of T_{s_i} = C_{s_i} + v.
    LaurentMatrix t_matrix(int i) const;
    /// Trace of T_w.
    Laurent trace(int w) const;
    /// Trace of T_w at v = 1.
    long long trace_at_one(int w) const;
};

/// Requires the set to be convex for <=_L (and hence a union of left
/// cells); throws NotACellUnion with a witness (x, y, z) otherwise.
CellModule cell_module(std::vector<int> elements, const KLTable& table, const Preorder& left);

/// Checks the quadratic and braid relations for the generator matrices;
/// returns a description of the first violation, or nullopt.
std::optional<std::string> check_module_relations(const CellModule& module);

LaurentMatrix mat_mul(const LaurentMatrix& a, const LaurentMatrix& b);

/// Characters chi_lambda, realized on the left cell containing w_lambda.
class CharacterTable {
public:
    CharacterTable(const KLTable& table, const Preorder& left);

    const std::vector<Partition>& partitions() const noexcept { return partitions_; }
    const CellModule& module(const Partition& lambda) const;
    /// chi_lambda(T_w).
    Laurent value(const Partition& lambda, int w) const;
    /// chi_lambda(T_w) at v = 1.
    long long value_at_one(const Partition& lambda, int w) const;

    /// Multiplicities of chi_lambda in the character of a left cell module;
    /// throws std::logic_error on a non-integral or negative multiplicity.
    std::map<Partition, int> decompose(const CellModule& module) const;

private:
    GroupPtr group_;
    std::vector<Partition> partitions_;
    std::vector<CellModule> modules_;
    std::vector<std::vector<long long>> at_one_;  // [partition][w]
};

/// Cycle type of a permutation, as a partition.
Partition cycle_type(const Perm& w);
/// Ordinary irreducible character of S_n by the Murnaghan-Nakayama rule,
/// labelled so that (n) is the trivial character.
long long murnaghan_nakayama(const Partition& lambda, const Partition& rho);

}  // namespace cellkit
