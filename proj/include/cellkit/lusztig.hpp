// Lusztig's a-function, Delta and n_z, the gamma-constants, the set of
// distinguished involutions, checks of P1-P15, and the ring J.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cellkit/murphy.hpp"

namespace cellkit {

/// All structure constants h_{x,y,z}, stored sparsely per pair (x,y).
class HTensor {
public:
    using Row = std::vector<std::pair<int, Laurent>>;

    /// Builds C'_x C'_y for every x by induction on x, one y at a time.
    static std::shared_ptr<HTensor> compute(const KLTable& table, const std::function<void(int, int)>& progress = {});
    static std::shared_ptr<HTensor> from_rows(GroupPtr group, std::vector<Row> rows);

    const GroupPtr& group() const noexcept { return group_; }
    /// Nonzero h_{x,y,z}, z increasing.
    const Row& row(int x, int y) const { return rows_[static_cast<size_t>(x) * static_cast<size_t>(group_->size()) + static_cast<size_t>(y)]; }
    const std::vector<Row>& rows() const noexcept { return rows_; }
    Laurent h(int x, int y, int z) const;
    size_t nonzero_count() const;

    friend bool operator==(const HTensor& a, const HTensor& b) { return a.group_->n() == b.group_->n() && a.rows_ == b.rows_; }

private:
    GroupPtr group_;
    std::vector<Row> rows_;
};

using HTensorPtr = std::shared_ptr<const HTensor>;

struct AData {
    std::vector<int> a;
    std::vector<int> delta;
    std::vector<Integer> n;
    std::vector<Partition> shape;
};

/// a(z) from the full tensor; Delta(z), n_z from p_{1,z}; shape lambda_z.
AData compute_adata(const HTensor& tensor, const KLTable& table);

/// gamma_{x,y,z^-1} = constant term of v^{a(z)} h_{x,y,z}.
class GammaTable {
public:
    GammaTable(const HTensor& tensor, const AData& adata);

    /// gamma_{x,y,z}.
    Integer get(int x, int y, int z) const;
    /// Pairs (z, gamma_{x,y,z}) with nonzero value, z increasing.
    const std::vector<std::pair<int, Integer>>& entries(int x, int y) const {
        return entries_[static_cast<size_t>(x) * static_cast<size_t>(size_) + static_cast<size_t>(y)];
    }
    int size() const noexcept { return size_; }

private:
    int size_;
    std::vector<std::vector<std::pair<int, Integer>>> entries_;
};

/// {z : a(z) = Delta(z)}, increasing.
std::vector<int> distinguished_set(const AData& adata);

struct PropertyResult {
    enum class Status { pass, fail, skipped };
    int number = 0;
    Status status = Status::skipped;
    std::string scope;  // "exhaustive" or "sampled"
    long long checked = 0;
    std::vector<int> witness;  // element indices
    std::string detail;
};

std::string status_name(PropertyResult::Status s);

struct VerifyOptions {
    std::set<int> properties;  // empty means all of 1..15
    /// Quadruples for a sampled P15; 0 selects the exhaustive scan.
    long long p15_sample = 0;
    std::uint64_t seed = 1729;
};

struct PropertyReport {
    int n = 0;
    std::vector<PropertyResult> results;
    bool all_pass() const;
};

/// Default sample size for P15 once exhaustive scans become expensive.
constexpr long long kDefaultP15Sample = 1000000;

PropertyReport verify_properties(const KLTable& table, const HTensor& tensor, const VerifyOptions& options);

/// Lusztig's ring J with basis t_w.
class JRing {
public:
    using Vec = std::map<int, Integer>;

    JRing(const HTensor& tensor, const AData& adata);

    int size() const noexcept { return size_; }
    /// t_x t_y.
    const Vec& product(int x, int y) const { return table_[static_cast<size_t>(x) * static_cast<size_t>(size_) + static_cast<size_t>(y)]; }
    Vec mul(const Vec& a, const Vec& b) const;
    /// sum_{d in D} n_d t_d.
    const Vec& identity() const noexcept { return identity_; }

    /// First triple (x,y,z) breaking associativity, if any.
    std::optional<std::vector<int>> associativity_failure() const;
    /// First x with 1_J t_x != t_x or t_x 1_J != t_x.
    std::optional<int> identity_failure() const;
    /// Checks t_{g(i,j)} t_{g(k,l)} = delta_{jk} t_{g(i,l)} across all blocks;
    /// returns the offending pair (x, y), if any.
    std::optional<std::pair<int, int>> matrix_unit_failure(const std::vector<IndexMap>& maps) const;

private:
    int size_;
    std::vector<Vec> table_;
    Vec identity_;
};

}  // namespace cellkit
