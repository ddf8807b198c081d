#include "cellkit/lusztig.hpp"

#include <algorithm>
#include <random>

namespace cellkit {

// h-tensor

std::shared_ptr<HTensor> HTensor::compute(const KLTable& table, const std::function<void(int, int)>& progress) {
    auto out = std::make_shared<HTensor>();
    out->group_ = table.group();
    const SymmetricGroup& g = *out->group_;
    const size_t N = static_cast<size_t>(g.size());
    out->rows_.assign(N * N, {});
    std::vector<std::vector<Laurent>> rows(N, std::vector<Laurent>(N));
    for (int y = 0; y < g.size(); ++y) {
        for (auto& r : rows)
            for (auto& c : r) c = Laurent();
        rows[0][static_cast<size_t>(y)] = 1;
        for (int x = 1; x < g.size(); ++x) {
            // C'_x C'_y = C'_s (C'_{sx} C'_y) - sum_{sz<z} mu(z,sx) C'_z C'_y
            const int i = g.first_left_descent(x);
            const int xs = g.left_mul(i, x);
            auto& cur = rows[static_cast<size_t>(x)];
            cprime_left_mul(i, rows[static_cast<size_t>(xs)], cur, table);
            for (auto [z, m] : table.mu_list(xs)) {
                if (!g.is_left_descent(i, z)) continue;
                const auto& rz = rows[static_cast<size_t>(z)];
                const Integer scale(-m);
                for (size_t u = 0; u < N; ++u)
                    if (!rz[u].is_zero()) cur[u].add_scaled(scale, rz[u]);
            }
        }
        for (size_t x = 0; x < N; ++x) {
            Row& dest = out->rows_[x * N + static_cast<size_t>(y)];
            for (size_t z = 0; z < N; ++z)
                if (!rows[x][z].is_zero()) dest.emplace_back(static_cast<int>(z), rows[x][z]);
        }
        if (progress) progress(y + 1, g.size());
    }
    return out;
}

std::shared_ptr<HTensor> HTensor::from_rows(GroupPtr group, std::vector<Row> rows) {
    const size_t N = static_cast<size_t>(group->size());
    if (rows.size() != N * N) throw std::invalid_argument("h-tensor has the wrong number of rows");
    auto out = std::make_shared<HTensor>();
    out->group_ = std::move(group);
    out->rows_ = std::move(rows);
    return out;
}

Laurent HTensor::h(int x, int y, int z) const {
    const Row& r = row(x, y);
    auto it = std::lower_bound(r.begin(), r.end(), z, [](const auto& e, int key) { return e.first < key; });
    if (it != r.end() && it->first == z) return it->second;
    return Laurent();
}

size_t HTensor::nonzero_count() const {
    size_t total = 0;
    for (const auto& r : rows_) total += r.size();
    return total;
}

// a-function and friends

AData compute_adata(const HTensor& tensor, const KLTable& table) {
    const SymmetricGroup& g = *tensor.group();
    const size_t N = static_cast<size_t>(g.size());
    AData out;
    out.a.assign(N, 0);
    for (const auto& r : tensor.rows())
        for (const auto& [z, h] : r) out.a[static_cast<size_t>(z)] = std::max(out.a[static_cast<size_t>(z)], -h.min_exp());
    out.delta.resize(N);
    out.n.resize(N);
    for (int z = 0; z < g.size(); ++z) {
        const Laurent& p = table.p(g.identity(), z);
        // Leading term: every other term of p_{1,z} has a smaller power of v.
        out.delta[static_cast<size_t>(z)] = -p.max_exp();
        out.n[static_cast<size_t>(z)] = p.coeff(p.max_exp());
        out.shape.push_back(shape_of(g.element(z)));
    }
    return out;
}

GammaTable::GammaTable(const HTensor& tensor, const AData& adata) : size_(tensor.group()->size()) {
    const SymmetricGroup& g = *tensor.group();
    entries_.assign(static_cast<size_t>(size_) * static_cast<size_t>(size_), {});
    for (int x = 0; x < size_; ++x)
        for (int y = 0; y < size_; ++y) {
            auto& dest = entries_[static_cast<size_t>(x) * static_cast<size_t>(size_) + static_cast<size_t>(y)];
            for (const auto& [z, h] : tensor.row(x, y)) {
                Integer c = h.coeff(-adata.a[static_cast<size_t>(z)]);
                if (!c.is_zero()) dest.emplace_back(g.inverse(z), std::move(c));
            }
            std::sort(dest.begin(), dest.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
        }
}

Integer GammaTable::get(int x, int y, int z) const {
    for (const auto& [w, c] : entries(x, y))
        if (w == z) return c;
    return 0;
}

std::vector<int> distinguished_set(const AData& adata) {
    std::vector<int> out;
    for (size_t z = 0; z < adata.a.size(); ++z)
        if (adata.a[z] == adata.delta[z]) out.push_back(static_cast<int>(z));
    return out;
}

// Properties

std::string status_name(PropertyResult::Status s) {
    switch (s) {
        case PropertyResult::Status::pass: return "pass";
        case PropertyResult::Status::fail: return "fail";
        case PropertyResult::Status::skipped: return "skipped";
    }
    return "?";
}

bool PropertyReport::all_pass() const {
    for (const auto& r : results)
        if (r.status == PropertyResult::Status::fail) return false;
    return true;
}

namespace {

struct Context {
    const SymmetricGroup& g;
    const KLTable& table;
    const HTensor& tensor;
    const AData& adata;
    const GammaTable& gamma;
    const std::vector<int>& dset;
    const Preorder& left;
    const Preorder& right;
    const Preorder& two;
};

class Check {
public:
    explicit Check(PropertyResult& r) : r_(r) {
        r_.status = PropertyResult::Status::pass;
        r_.scope = "exhaustive";
    }
    // Returns false once a failure has been recorded.
    bool operator()(bool ok, std::vector<int> witness, const std::string& detail) {
        ++r_.checked;
        if (ok) return true;
        r_.status = PropertyResult::Status::fail;
        r_.witness = std::move(witness);
        r_.detail = detail;
        return false;
    }
    bool failed() const { return r_.status == PropertyResult::Status::fail; }

private:
    PropertyResult& r_;
};

bool is_distinguished(const Context& c, int z) { return std::binary_search(c.dset.begin(), c.dset.end(), z); }

void p1(const Context& c, Check& check) {
    for (int z = 0; z < c.g.size(); ++z)
        if (!check(c.adata.a[static_cast<size_t>(z)] <= c.adata.delta[static_cast<size_t>(z)], {z}, "a(z) > Delta(z)")) return;
}

void p2(const Context& c, Check& check) {
    for (int x = 0; x < c.g.size(); ++x)
        for (int y = 0; y < c.g.size(); ++y)
            for (const auto& [d, value] : c.gamma.entries(x, y))
                if (is_distinguished(c, d) && !check(x == c.g.inverse(y), {x, y, d}, "gamma_{x,y,d} != 0 with x != y^-1")) return;
}

void p3(const Context& c, Check& check) {
    for (int y = 0; y < c.g.size(); ++y) {
        int count = 0;
        for (const auto& [d, value] : c.gamma.entries(c.g.inverse(y), y))
            if (is_distinguished(c, d)) ++count;
        if (!check(count == 1, {y}, "found " + std::to_string(count) + " d in D with gamma_{y^-1,y,d} != 0")) return;
    }
}

void p4(const Context& c, Check& check) {
    for (int z = 0; z < c.g.size(); ++z)
        for (int zp = 0; zp < c.g.size(); ++zp)
            if (c.two.leq(zp, z) &&
                !check(c.adata.a[static_cast<size_t>(zp)] >= c.adata.a[static_cast<size_t>(z)], {zp, z}, "z' <=_LR z but a(z') < a(z)"))
                return;
}

void p5(const Context& c, Check& check) {
    for (int y = 0; y < c.g.size(); ++y)
        for (const auto& [d, value] : c.gamma.entries(c.g.inverse(y), y)) {
            if (!is_distinguished(c, d)) continue;
            const Integer& nd = c.adata.n[static_cast<size_t>(d)];
            const bool ok = value == nd && (nd == Integer(1) || nd == Integer(-1));
            if (!check(ok, {y, d}, "gamma_{y^-1,y,d} = " + value.to_string() + ", n_d = " + nd.to_string())) return;
        }
}

void p6(const Context& c, Check& check) {
    for (int d : c.dset)
        if (!check(c.g.inverse(d) == d, {d}, "d in D is not an involution")) return;
}

void p7(const Context& c, Check& check) {
    for (int x = 0; x < c.g.size(); ++x)
        for (int y = 0; y < c.g.size(); ++y)
            for (const auto& [z, value] : c.gamma.entries(x, y))
                if (!check(c.gamma.get(y, z, x) == value, {x, y, z}, "gamma_{x,y,z} != gamma_{y,z,x}")) return;
}

void p8(const Context& c, Check& check) {
    for (int x = 0; x < c.g.size(); ++x)
        for (int y = 0; y < c.g.size(); ++y)
            for (const auto& [z, value] : c.gamma.entries(x, y)) {
                const bool ok = c.left.equiv(x, c.g.inverse(y)) && c.left.equiv(y, c.g.inverse(z)) && c.left.equiv(z, c.g.inverse(x));
                if (!check(ok, {x, y, z}, "gamma_{x,y,z} != 0 but the cell conditions fail")) return;
            }
}

void same_a_implies_equiv(const Context& c, Check& check, const Preorder& order, const std::string& rel) {
    for (int z = 0; z < c.g.size(); ++z)
        for (int zp = 0; zp < c.g.size(); ++zp)
            if (order.leq(zp, z) && c.adata.a[static_cast<size_t>(zp)] == c.adata.a[static_cast<size_t>(z)] &&
                !check(order.equiv(zp, z), {zp, z}, "z' <=_" + rel + " z with equal a but not equivalent"))
                return;
}

void p12(const Context& c, Check& check) {
    const int rank = c.g.rank();
    for (unsigned mask = 0; mask < (1u << rank); ++mask) {
        std::vector<int> members;
        for (int w = 0; w < c.g.size(); ++w) {
            bool inside = true;
            for (int i : c.g.word(w))
                if (!(mask & (1u << (i - 1)))) inside = false;
            if (inside) members.push_back(w);
        }
        std::vector<char> is_member(static_cast<size_t>(c.g.size()), 0);
        for (int w : members) is_member[static_cast<size_t>(w)] = 1;
        std::vector<int> a_local(static_cast<size_t>(c.g.size()), 0);
        for (int x : members)
            for (int y : members)
                for (const auto& [z, h] : c.tensor.row(x, y)) {
                    if (!is_member[static_cast<size_t>(z)]) continue;  // cannot happen in a parabolic subalgebra
                    a_local[static_cast<size_t>(z)] = std::max(a_local[static_cast<size_t>(z)], -h.min_exp());
                }
        std::string subset = "{";
        for (int i = 1; i <= rank; ++i)
            if (mask & (1u << (i - 1))) subset += (subset.size() > 1 ? "," : "") + std::string("s") + std::to_string(i);
        subset += "}";
        for (int y : members)
            if (!check(a_local[static_cast<size_t>(y)] == c.adata.a[static_cast<size_t>(y)], {y},
                       "a computed in W_I for I = " + subset + " differs"))
                return;
    }
}

void p13(const Context& c, Check& check) {
    const CellPartition cells(c.left);
    for (const auto& cell : cells.cells()) {
        std::vector<int> ds;
        for (int w : cell)
            if (is_distinguished(c, w)) ds.push_back(w);
        if (!check(ds.size() == 1, {cell.front()}, "left cell contains " + std::to_string(ds.size()) + " elements of D")) return;
        for (int x : cell)
            if (!check(!c.gamma.get(c.g.inverse(x), x, ds.front()).is_zero(), {x, ds.front()}, "gamma_{x^-1,x,d} = 0")) return;
    }
}

void p14(const Context& c, Check& check) {
    for (int z = 0; z < c.g.size(); ++z)
        if (!check(c.two.equiv(z, c.g.inverse(z)), {z}, "z and z^-1 lie in different two-sided cells")) return;
}

// P15 for one triple (w, x', x) and every y with a(y) = a(w); returns the
// failing y, if any, and adds the number of quadruples checked.
std::optional<int> p15_triple(const Context& c, int w, int xp, int x, long long& checked,
                              std::vector<std::vector<BiLaurent::Term>>& lhs, std::vector<std::vector<BiLaurent::Term>>& rhs) {
    const int target_a = c.adata.a[static_cast<size_t>(w)];
    for (auto& v : lhs) v.clear();
    for (auto& v : rhs) v.clear();
    auto add_outer = [&](std::vector<BiLaurent::Term>& acc, const Laurent& in_w, const Laurent& in_v) {
        for (const auto& s : in_v.terms())
            for (const auto& t : in_w.terms()) acc.push_back({s.exp, t.exp, s.coeff * t.coeff});
    };
    for (const auto& [yp, hb] : c.tensor.row(w, xp))
        for (const auto& [y, h] : c.tensor.row(x, yp))
            if (c.adata.a[static_cast<size_t>(y)] == target_a) add_outer(lhs[static_cast<size_t>(y)], hb, h);
    for (const auto& [yp, h] : c.tensor.row(x, w))
        for (const auto& [y, hb] : c.tensor.row(yp, xp))
            if (c.adata.a[static_cast<size_t>(y)] == target_a) add_outer(rhs[static_cast<size_t>(y)], hb, h);
    for (int y = 0; y < c.g.size(); ++y) {
        if (c.adata.a[static_cast<size_t>(y)] != target_a) continue;
        ++checked;
        if (lhs[static_cast<size_t>(y)].empty() && rhs[static_cast<size_t>(y)].empty()) continue;
        if (!(BiLaurent::from_terms(std::move(lhs[static_cast<size_t>(y)])) == BiLaurent::from_terms(std::move(rhs[static_cast<size_t>(y)]))))
            return y;
    }
    return std::nullopt;
}

void p15(const Context& c, PropertyResult& r, const VerifyOptions& options) {
    r.status = PropertyResult::Status::pass;
    const size_t N = static_cast<size_t>(c.g.size());
    std::vector<std::vector<BiLaurent::Term>> lhs(N), rhs(N);
    auto fail = [&](int x, int xp, int y, int w) {
        r.status = PropertyResult::Status::fail;
        r.witness = {x, xp, y, w};
        r.detail = "the two sums differ for (x, x', y, w)";
    };
    if (options.p15_sample <= 0) {
        r.scope = "exhaustive";
        for (int w = 0; w < c.g.size(); ++w)
            for (int xp = 0; xp < c.g.size(); ++xp)
                for (int x = 0; x < c.g.size(); ++x)
                    if (auto y = p15_triple(c, w, xp, x, r.checked, lhs, rhs)) return fail(x, xp, *y, w);
        return;
    }
    r.scope = "sampled";
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<int> pick(0, c.g.size() - 1);
    while (r.checked < options.p15_sample) {
        const int w = pick(rng), xp = pick(rng), x = pick(rng);
        if (auto y = p15_triple(c, w, xp, x, r.checked, lhs, rhs)) return fail(x, xp, *y, w);
    }
}

}  // namespace

PropertyReport verify_properties(const KLTable& table, const HTensor& tensor, const VerifyOptions& options) {
    const SymmetricGroup& g = *table.group();
    const AData adata = compute_adata(tensor, table);
    const GammaTable gamma(tensor, adata);
    const std::vector<int> dset = distinguished_set(adata);
    const Preorder left(table, Side::left), right(table, Side::right), two(table, Side::two);
    const Context c{g, table, tensor, adata, gamma, dset, left, right, two};
    PropertyReport report;
    report.n = g.n();
    for (int k = 1; k <= 15; ++k) {
        PropertyResult r;
        r.number = k;
        if (!options.properties.empty() && !options.properties.count(k)) {
            report.results.push_back(r);
            continue;
        }
        if (k == 15) {
            p15(c, r, options);
        } else {
            Check check(r);
            switch (k) {
                case 1: p1(c, check); break;
                case 2: p2(c, check); break;
                case 3: p3(c, check); break;
                case 4: p4(c, check); break;
                case 5: p5(c, check); break;
                case 6: p6(c, check); break;
                case 7: p7(c, check); break;
                case 8: p8(c, check); break;
                case 9: same_a_implies_equiv(c, check, left, "L"); break;
                case 10: same_a_implies_equiv(c, check, right, "R"); break;
                case 11: same_a_implies_equiv(c, check, two, "LR"); break;
                case 12: p12(c, check); break;
                case 13: p13(c, check); break;
                case 14: p14(c, check); break;
                default: break;
            }
        }
        report.results.push_back(r);
    }
    return report;
}

// The ring J

JRing::JRing(const HTensor& tensor, const AData& adata) : size_(tensor.group()->size()) {
    table_.assign(static_cast<size_t>(size_) * static_cast<size_t>(size_), {});
    for (int x = 0; x < size_; ++x)
        for (int y = 0; y < size_; ++y) {
            Vec& dest = table_[static_cast<size_t>(x) * static_cast<size_t>(size_) + static_cast<size_t>(y)];
            // t_x t_y = sum_z gamma_{x,y,z^-1} t_z
            for (const auto& [z, h] : tensor.row(x, y)) {
                Integer c = h.coeff(-adata.a[static_cast<size_t>(z)]);
                if (!c.is_zero()) dest[z] = std::move(c);
            }
        }
    for (int d : distinguished_set(adata)) identity_[d] = adata.n[static_cast<size_t>(d)];
}

JRing::Vec JRing::mul(const Vec& a, const Vec& b) const {
    Vec out;
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b)
            for (const auto& [z, cz] : product(x, y)) {
                Integer& slot = out[z];
                slot.add_product(cx * cy, cz);
            }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

std::optional<std::vector<int>> JRing::associativity_failure() const {
    for (int x = 0; x < size_; ++x)
        for (int y = 0; y < size_; ++y)
            for (int z = 0; z < size_; ++z) {
                const Vec tx{{x, 1}}, ty{{y, 1}}, tz{{z, 1}};
                if (mul(product(x, y), tz) != mul(tx, product(y, z))) return std::vector<int>{x, y, z};
            }
    return std::nullopt;
}

std::optional<int> JRing::identity_failure() const {
    for (int x = 0; x < size_; ++x) {
        const Vec tx{{x, 1}};
        if (mul(identity_, tx) != tx || mul(tx, identity_) != tx) return x;
    }
    return std::nullopt;
}

std::optional<std::pair<int, int>> JRing::matrix_unit_failure(const std::vector<IndexMap>& maps) const {
    struct Slot {
        int block = -1, i = 0, j = 0;
    };
    std::vector<Slot> where(static_cast<size_t>(size_));
    for (size_t b = 0; b < maps.size(); ++b)
        for (int i = 0; i < maps[b].dim(); ++i)
            for (int j = 0; j < maps[b].dim(); ++j)
                where[static_cast<size_t>(maps[b].grid[static_cast<size_t>(i)][static_cast<size_t>(j)])] = {static_cast<int>(b), i, j};
    for (int x = 0; x < size_; ++x)
        if (where[static_cast<size_t>(x)].block < 0) return std::pair{x, x};
    for (int x = 0; x < size_; ++x)
        for (int y = 0; y < size_; ++y) {
            const Slot& sx = where[static_cast<size_t>(x)];
            const Slot& sy = where[static_cast<size_t>(y)];
            Vec expected;
            if (sx.block == sy.block && sx.j == sy.i)
                expected[maps[static_cast<size_t>(sx.block)].grid[static_cast<size_t>(sx.i)][static_cast<size_t>(sy.j)]] = 1;
            if (product(x, y) != expected) return std::pair{x, y};
        }
    return std::nullopt;
}

}  // namespace cellkit
