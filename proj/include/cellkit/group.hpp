// Indexed model of S_n: every element gets a dense index in length-lex
// order, with lookup tables for lengths, inverses and multiplication by
// simple reflections on either side.
#pragma once

#include <memory>
#include <vector>

#include "cellkit/coxeter.hpp"

namespace cellkit {

class SymmetricGroup {
public:
    explicit SymmetricGroup(int n);

    /// Shared instance per rank; built on first use.
    static std::shared_ptr<const SymmetricGroup> get(int n);

    int n() const noexcept { return n_; }
    int size() const noexcept { return static_cast<int>(elements_.size()); }
    int rank() const noexcept { return n_ - 1; }  // number of simple reflections

    const Perm& element(int index) const { return elements_[static_cast<size_t>(index)]; }
    const std::vector<Perm>& elements() const noexcept { return elements_; }
    int index_of(const Perm& w) const;

    int identity() const noexcept { return 0; }
    int longest() const noexcept { return size() - 1; }
    int length(int w) const { return length_[static_cast<size_t>(w)]; }
    int sign(int w) const { return length(w) % 2 == 0 ? 1 : -1; }
    int inverse(int w) const { return inverse_[static_cast<size_t>(w)]; }

    /// s_i w and w s_i for 1 <= i < n.
    int left_mul(int i, int w) const { return left_[static_cast<size_t>(i - 1)][static_cast<size_t>(w)]; }
    int right_mul(int w, int i) const { return right_[static_cast<size_t>(i - 1)][static_cast<size_t>(w)]; }
    bool is_left_descent(int i, int w) const { return length(left_mul(i, w)) < length(w); }
    bool is_right_descent(int w, int i) const { return length(right_mul(w, i)) < length(w); }
    /// Smallest i with s_i w < w, or 0 for the identity.
    int first_left_descent(int w) const { return first_left_[static_cast<size_t>(w)]; }
    int mul(int x, int y) const;
    /// Lexicographically smallest reduced word.
    const std::vector<int>& word(int w) const { return words_[static_cast<size_t>(w)]; }

private:
    int n_;
    std::vector<Perm> elements_;
    std::vector<int> rank_to_index_;
    std::vector<int> length_;
    std::vector<int> inverse_;
    std::vector<int> first_left_;
    std::vector<std::vector<int>> left_;
    std::vector<std::vector<int>> right_;
    std::vector<std::vector<int>> words_;
};

using GroupPtr = std::shared_ptr<const SymmetricGroup>;

}  // namespace cellkit
