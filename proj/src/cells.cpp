#include "cellkit/cells.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace cellkit {

std::string side_name(Side side) {
    switch (side) {
        case Side::left: return "left";
        case Side::right: return "right";
        case Side::two: return "two";
    }
    return "?";
}

// Preorders

Preorder::Preorder(const KLTable& table, Side side) : group_(table.group()), side_(side) {
    const SymmetricGroup& g = *group_;
    const size_t N = static_cast<size_t>(g.size());
    std::vector<std::vector<int>> left(N);
    for (int y = 0; y < g.size(); ++y) {
        std::set<int> targets;
        for (int i = 1; i <= g.rank(); ++i) {
            const auto row = h_s_row(i, y, table);
            for (int z = 0; z < g.size(); ++z)
                if (z != y && !row[static_cast<size_t>(z)].is_zero()) targets.insert(z);
        }
        left[static_cast<size_t>(y)].assign(targets.begin(), targets.end());
    }
    arrows_.assign(N, {});
    for (int y = 0; y < g.size(); ++y) {
        std::set<int> targets;
        if (side != Side::right)
            targets.insert(left[static_cast<size_t>(y)].begin(), left[static_cast<size_t>(y)].end());
        if (side != Side::left)
            for (int z : left[static_cast<size_t>(g.inverse(y))]) targets.insert(g.inverse(z));
        arrows_[static_cast<size_t>(y)].assign(targets.begin(), targets.end());
    }
    reach_.assign(N, std::vector<char>(N, 0));
    for (size_t y = 0; y < N; ++y) {
        auto& seen = reach_[y];
        std::deque<int> queue{static_cast<int>(y)};
        seen[y] = 1;
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int z : arrows_[static_cast<size_t>(u)])
                if (!seen[static_cast<size_t>(z)]) {
                    seen[static_cast<size_t>(z)] = 1;
                    queue.push_back(z);
                }
        }
    }
}

CellPartition::CellPartition(const Preorder& order) : side_(order.side()) {
    const int N = order.group()->size();
    cell_of_.assign(static_cast<size_t>(N), -1);
    for (int x = 0; x < N; ++x) {
        if (cell_of_[static_cast<size_t>(x)] >= 0) continue;
        const int id = static_cast<int>(cells_.size());
        cells_.emplace_back();
        for (int y = x; y < N; ++y)
            if (order.equiv(x, y)) {
                cell_of_[static_cast<size_t>(y)] = id;
                cells_.back().push_back(y);
            }
    }
    const size_t C = cells_.size();
    leq_.assign(C, std::vector<char>(C, 0));
    for (size_t a = 0; a < C; ++a)
        for (size_t b = 0; b < C; ++b) leq_[a][b] = order.leq(cells_[a].front(), cells_[b].front()) ? 1 : 0;
}

// Star operation

std::optional<int> star_operation(const SymmetricGroup& g, int w, int i) {
    if (i < 1 || i + 1 > g.rank()) throw std::invalid_argument("star operation needs adjacent generators s_i, s_{i+1}");
    auto in_domain = [&](int x) { return g.is_right_descent(x, i) != g.is_right_descent(x, i + 1); };
    if (!in_domain(w)) return std::nullopt;
    const int ws = g.right_mul(w, i);
    const int wt = g.right_mul(w, i + 1);
    if (in_domain(ws)) return ws;
    return wt;
}

// Cell modules

LaurentMatrix mat_mul(const LaurentMatrix& a, const LaurentMatrix& b) {
    const size_t r = a.size(), k = b.size(), c = k ? b[0].size() : 0;
    LaurentMatrix out(r, std::vector<Laurent>(c));
    for (size_t i = 0; i < r; ++i)
        for (size_t m = 0; m < k; ++m) {
            if (a[i][m].is_zero()) continue;
            for (size_t j = 0; j < c; ++j)
                if (!b[m][j].is_zero()) out[i][j].add_product(a[i][m], b[m][j]);
        }
    return out;
}

LaurentMatrix CellModule::t_matrix(int i) const {
    LaurentMatrix m = gen[static_cast<size_t>(i - 1)];
    for (size_t k = 0; k < m.size(); ++k) m[k][k] += Laurent::v(1);
    return m;
}

Laurent CellModule::trace(int w) const {
    const size_t d = elements.size();
    LaurentMatrix m(d, std::vector<Laurent>(d));
    for (size_t k = 0; k < d; ++k) m[k][k] = 1;
    for (int i : group->word(w)) m = mat_mul(m, t_matrix(i));
    Laurent out;
    for (size_t k = 0; k < d; ++k) out += m[k][k];
    return out;
}

long long CellModule::trace_at_one(int w) const {
    const size_t d = elements.size();
    using IntMatrix = std::vector<std::vector<long long>>;
    IntMatrix m(d, std::vector<long long>(d, 0));
    for (size_t k = 0; k < d; ++k) m[k][k] = 1;
    for (int i : group->word(w)) {
        const auto& g = gen[static_cast<size_t>(i - 1)];
        IntMatrix t(d, std::vector<long long>(d, 0));
        for (size_t r = 0; r < d; ++r)
            for (size_t c = 0; c < d; ++c) t[r][c] = g[r][c].at_one().small_value() + (r == c ? 1 : 0);
        IntMatrix next(d, std::vector<long long>(d, 0));
        for (size_t r = 0; r < d; ++r)
            for (size_t k = 0; k < d; ++k)
                for (size_t c = 0; c < d; ++c) next[r][c] += m[r][k] * t[k][c];
        m = std::move(next);
    }
    long long out = 0;
    for (size_t k = 0; k < d; ++k) out += m[k][k];
    return out;
}

CellModule cell_module(std::vector<int> elements, const KLTable& table, const Preorder& left) {
    if (left.side() != Side::left) throw std::invalid_argument("cell_module needs the left preorder");
    const SymmetricGroup& g = *table.group();
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty()) throw std::invalid_argument("cell_module needs a nonempty set");
    std::vector<int> pos(static_cast<size_t>(g.size()), -1);
    for (size_t k = 0; k < elements.size(); ++k) pos[static_cast<size_t>(elements[k])] = static_cast<int>(k);
    for (int x : elements)
        for (int z : elements)
            for (int y = 0; y < g.size(); ++y)
                if (pos[static_cast<size_t>(y)] < 0 && left.leq(x, y) && left.leq(y, z))
                    throw NotACellUnion("set is not convex for <=_L: " + g.element(x).to_string() + " <= " +
                                            g.element(y).to_string() + " <= " + g.element(z).to_string(),
                                        {x, y, z});
    CellModule out;
    out.group = table.group();
    out.elements = elements;
    const size_t d = elements.size();
    for (int i = 1; i <= g.rank(); ++i) {
        LaurentMatrix m(d, std::vector<Laurent>(d));
        for (size_t c = 0; c < d; ++c) {
            const auto row = h_s_row(i, elements[c], table);
            for (size_t r = 0; r < d; ++r) m[r][c] = -row[static_cast<size_t>(elements[r])];
        }
        out.gen.push_back(std::move(m));
    }
    return out;
}

std::optional<std::string> check_module_relations(const CellModule& module) {
    const int rank = module.group->rank();
    const size_t d = module.elements.size();
    auto is_zero = [](const LaurentMatrix& m) {
        for (const auto& row : m)
            for (const auto& e : row)
                if (!e.is_zero()) return false;
        return true;
    };
    auto minus = [](LaurentMatrix a, const LaurentMatrix& b) {
        for (size_t r = 0; r < a.size(); ++r)
            for (size_t c = 0; c < a[r].size(); ++c) a[r][c] -= b[r][c];
        return a;
    };
    for (int i = 1; i <= rank; ++i) {
        // (T_s - v)(T_s + v^-1) = C_s (C_s + v + v^-1)
        LaurentMatrix shifted = module.gen[static_cast<size_t>(i - 1)];
        for (size_t k = 0; k < d; ++k) shifted[k][k] += Laurent::v(1) + Laurent::v(-1);
        if (!is_zero(mat_mul(module.gen[static_cast<size_t>(i - 1)], shifted)))
            return "quadratic relation fails for s" + std::to_string(i);
    }
    for (int i = 1; i <= rank; ++i)
        for (int j = i + 1; j <= rank; ++j) {
            const LaurentMatrix a = module.t_matrix(i), b = module.t_matrix(j);
            if (j == i + 1) {
                if (!is_zero(minus(mat_mul(mat_mul(a, b), a), mat_mul(mat_mul(b, a), b))))
                    return "braid relation fails for s" + std::to_string(i) + ", s" + std::to_string(j);
            } else if (!is_zero(minus(mat_mul(a, b), mat_mul(b, a)))) {
                return "commutation fails for s" + std::to_string(i) + ", s" + std::to_string(j);
            }
        }
    return std::nullopt;
}

// Characters

CharacterTable::CharacterTable(const KLTable& table, const Preorder& left) : group_(table.group()) {
    const SymmetricGroup& g = *group_;
    partitions_ = Partition::all(g.n());
    for (const auto& lambda : partitions_) {
        const int wl = g.index_of(young_data(lambda).longest);
        std::vector<int> cell;
        for (int x = 0; x < g.size(); ++x)
            if (left.equiv(x, wl)) cell.push_back(x);
        modules_.push_back(cell_module(cell, table, left));
        std::vector<long long> values(static_cast<size_t>(g.size()));
        for (int w = 0; w < g.size(); ++w) values[static_cast<size_t>(w)] = modules_.back().trace_at_one(w);
        at_one_.push_back(std::move(values));
    }
}

namespace {

size_t partition_slot(const std::vector<Partition>& parts, const Partition& lambda) {
    auto it = std::find(parts.begin(), parts.end(), lambda);
    if (it == parts.end()) throw std::invalid_argument("partition " + lambda.to_string() + " has the wrong size");
    return static_cast<size_t>(it - parts.begin());
}

}  // namespace

const CellModule& CharacterTable::module(const Partition& lambda) const {
    return modules_[partition_slot(partitions_, lambda)];
}

Laurent CharacterTable::value(const Partition& lambda, int w) const { return module(lambda).trace(w); }

long long CharacterTable::value_at_one(const Partition& lambda, int w) const {
    return at_one_[partition_slot(partitions_, lambda)][static_cast<size_t>(w)];
}

std::map<Partition, int> CharacterTable::decompose(const CellModule& module) const {
    const SymmetricGroup& g = *group_;
    std::vector<long long> chi(static_cast<size_t>(g.size()));
    for (int w = 0; w < g.size(); ++w) chi[static_cast<size_t>(w)] = module.trace_at_one(w);
    std::map<Partition, int> out;
    for (size_t k = 0; k < partitions_.size(); ++k) {
        long long sum = 0;
        for (int w = 0; w < g.size(); ++w) sum += chi[static_cast<size_t>(w)] * at_one_[k][static_cast<size_t>(w)];
        if (sum % g.size() != 0 || sum < 0)
            throw std::logic_error("multiplicity of " + partitions_[k].to_string() + " is not a nonnegative integer");
        if (sum != 0) out[partitions_[k]] = static_cast<int>(sum / g.size());
    }
    return out;
}

Partition cycle_type(const Perm& w) {
    std::vector<int> parts;
    std::vector<bool> seen(static_cast<size_t>(w.n()) + 1, false);
    for (int k = 1; k <= w.n(); ++k) {
        if (seen[static_cast<size_t>(k)]) continue;
        int len = 0;
        for (int j = k; !seen[static_cast<size_t>(j)]; j = w(j)) {
            seen[static_cast<size_t>(j)] = true;
            ++len;
        }
        parts.push_back(len);
    }
    return Partition(std::move(parts));
}

namespace {

// Beta-set form of the Murnaghan-Nakayama rule: removing a rim hook of
// length r moves one bead from b to b - r.
long long mn_rec(std::vector<int>& beta, const std::vector<int>& rho, size_t next) {
    if (next == rho.size()) return 1;
    const int r = rho[next];
    long long total = 0;
    for (size_t k = 0; k < beta.size(); ++k) {
        const int b = beta[k];
        const int target = b - r;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int between = 0;
        for (int c : beta)
            if (c > target && c < b) ++between;
        beta[k] = target;
        const long long sub = mn_rec(beta, rho, next + 1);
        beta[k] = b;
        total += (between % 2 == 0 ? 1 : -1) * sub;
    }
    return total;
}

}  // namespace

long long murnaghan_nakayama(const Partition& lambda, const Partition& rho) {
    if (lambda.size() != rho.size()) throw std::invalid_argument("Murnaghan-Nakayama needs partitions of the same n");
    const int k = lambda.length();
    std::vector<int> beta;
    for (int i = 0; i < k; ++i) beta.push_back(lambda.parts()[static_cast<size_t>(i)] + (k - 1 - i));
    return mn_rec(beta, rho.parts(), 0);
}

}  // namespace cellkit
