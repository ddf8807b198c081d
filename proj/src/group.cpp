#include "cellkit/group.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace cellkit {

namespace {

// Lehmer-code rank of a permutation, in [0, n!).
int lehmer_rank(const std::vector<int>& images) {
    const int n = static_cast<int>(images.size());
    int rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (images[static_cast<size_t>(j)] < images[static_cast<size_t>(i)]) ++smaller;
        rank = rank * (n - i) + smaller;
    }
    return rank;
}

}  // namespace

SymmetricGroup::SymmetricGroup(int n) : n_(n) {
    if (n < 1 || n > 9) throw std::invalid_argument("rank n must lie in 1..9");
    std::vector<int> images(static_cast<size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    do {
        elements_.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    std::stable_sort(elements_.begin(), elements_.end(), length_lex_less);

    const size_t N = elements_.size();
    rank_to_index_.assign(N, -1);
    for (size_t k = 0; k < N; ++k) rank_to_index_[static_cast<size_t>(lehmer_rank(elements_[k].images()))] = static_cast<int>(k);

    length_.resize(N);
    inverse_.resize(N);
    for (size_t k = 0; k < N; ++k) {
        length_[k] = elements_[k].length();
        inverse_[k] = index_of(elements_[k].inverse());
    }
    left_.assign(static_cast<size_t>(n - 1), std::vector<int>(N));
    right_.assign(static_cast<size_t>(n - 1), std::vector<int>(N));
    for (int i = 1; i < n; ++i) {
        const Perm s = Perm::simple(n, i);
        for (size_t k = 0; k < N; ++k) {
            left_[static_cast<size_t>(i - 1)][k] = index_of(s * elements_[k]);
            right_[static_cast<size_t>(i - 1)][k] = index_of(elements_[k] * s);
        }
    }
    first_left_.assign(N, 0);
    words_.resize(N);
    for (size_t k = 1; k < N; ++k) {
        const int w = static_cast<int>(k);
        for (int i = 1; i < n; ++i)
            if (is_left_descent(i, w)) {
                first_left_[k] = i;
                break;
            }
        // s w has a smaller index, so its word is already known.
        const int i = first_left_[k];
        words_[k] = {i};
        const auto& rest = words_[static_cast<size_t>(left_mul(i, w))];
        words_[k].insert(words_[k].end(), rest.begin(), rest.end());
    }
}

std::shared_ptr<const SymmetricGroup> SymmetricGroup::get(int n) {
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const SymmetricGroup>> registry;
    std::lock_guard lock(mutex);
    auto& slot = registry[n];
    if (!slot) slot = std::make_shared<const SymmetricGroup>(n);
    return slot;
}

int SymmetricGroup::index_of(const Perm& w) const {
    if (w.n() != n_) throw std::invalid_argument("permutation " + w.to_string() + " is not in S_" + std::to_string(n_));
    return rank_to_index_[static_cast<size_t>(lehmer_rank(w.images()))];
}

int SymmetricGroup::mul(int x, int y) const {
    int out = y;
    const auto& w = word(x);
    for (auto it = w.rbegin(); it != w.rend(); ++it) out = left_mul(*it, out);
    return out;
}

}  // namespace cellkit
