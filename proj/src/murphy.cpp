#include "cellkit/murphy.hpp"

#include <algorithm>

namespace cellkit {

HeckeElt x_lambda(const Partition& lambda, GroupPtr group) {
    HeckeElt out(group, Basis::T);
    for (const Perm& w : young_subgroup(lambda)) out.coeff_ref(group->index_of(w)) = Laurent::v(w.length());
    return out;
}

HeckeElt murphy_element(const TableauPair& pair, MurphyVariant variant, const KLTable& table) {
    const Partition lambda = pair.shape();
    if (pair.t.shape() != lambda) throw std::invalid_argument("tableau pair has mismatched shapes");
    if (!pair.s.is_standard() || !pair.t.is_standard()) throw std::invalid_argument("Murphy elements need standard tableaux");
    const GroupPtr& group = table.group();
    if (lambda.size() != group->n()) throw std::invalid_argument("tableau size does not match the KL table");
    const HeckeElt middle = variant == MurphyVariant::x
                                ? x_lambda(lambda, group)
                                : kl_element(group->index_of(young_data(lambda).longest), Basis::C, table);
    const HeckeElt left = HeckeElt::basis_element(group, Basis::T, group->index_of(d_of_tableau(pair.s)));
    const HeckeElt right = HeckeElt::basis_element(group, Basis::T, group->index_of(d_of_tableau(pair.t).inverse()));
    return t_mul(t_mul(left, middle), right);
}

Partition shape_of(const Perm& w) { return rsk(w).shape.conjugate(); }

IdealBasis ideal_basis(const Partition& lambda, const KLTable& table) {
    const SymmetricGroup& g = *table.group();
    if (lambda.size() != g.n()) throw std::invalid_argument("partition size does not match the KL table");
    IdealBasis out;
    out.lambda = lambda;
    for (const Partition& mu : Partition::all(g.n())) {
        if (!lambda.dominated_by(mu)) continue;
        const auto tabs = std_tableaux(mu);
        for (const auto& s : tabs)
            for (const auto& t : tabs) out.murphy.push_back({s, t});
    }
    for (int w = 0; w < g.size(); ++w)
        if (lambda.dominated_by(shape_of(g.element(w)))) out.kl.push_back(w);
    return out;
}

std::optional<int> ideal_violation(const HeckeElt& h, const Partition& lambda, const KLTable& table) {
    const HeckeElt c = convert_basis(h, Basis::C, table);
    for (int w : c.support())
        if (!lambda.dominated_by(shape_of(c.group()->element(w)))) return w;
    return std::nullopt;
}

// Index map

std::optional<std::pair<int, int>> IndexMap::locate(int w) const {
    for (size_t i = 0; i < grid.size(); ++i)
        for (size_t j = 0; j < grid[i].size(); ++j)
            if (grid[i][j] == w) return std::pair{static_cast<int>(i), static_cast<int>(j)};
    return std::nullopt;
}

int IndexMap::tableau_index(const Tableau& t) const {
    auto it = std::find(tableaux.begin(), tableaux.end(), t);
    if (it == tableaux.end()) throw std::invalid_argument("tableau " + t.to_string() + " is not a standard " + lambda.to_string() + "-tableau");
    return static_cast<int>(it - tableaux.begin());
}

IndexMap index_map(const Partition& lambda, const KLTable& table, const CellPartition& left, const CellPartition& right) {
    if (left.side() != Side::left || right.side() != Side::right) throw std::invalid_argument("index_map needs left and right cells");
    const SymmetricGroup& g = *table.group();
    if (lambda.size() != g.n()) throw std::invalid_argument("partition size does not match the KL table");
    IndexMap out;
    out.lambda = lambda;
    out.tableaux = std_tableaux(lambda);
    out.longest = g.index_of(young_data(lambda).longest);
    for (const auto& t : out.tableaux) out.x.push_back(g.index_of(d_of_tableau(t)));
    const int d = out.dim();
    std::vector<int> seen;
    out.grid.assign(static_cast<size_t>(d), std::vector<int>(static_cast<size_t>(d), -1));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const int row_rep = g.mul(out.x[static_cast<size_t>(i)], out.longest);
            const int col_rep = g.mul(out.longest, g.inverse(out.x[static_cast<size_t>(j)]));
            const int lc = left.cell_of(col_rep);
            std::vector<int> hits;
            for (int w : right.cells()[static_cast<size_t>(right.cell_of(row_rep))])
                if (left.cell_of(w) == lc) hits.push_back(w);
            if (hits.size() != 1)
                throw std::logic_error("cell intersection for " + lambda.to_string() + " at (" + std::to_string(i + 1) + "," +
                                       std::to_string(j + 1) + ") has " + std::to_string(hits.size()) + " elements");
            const int w = hits.front();
            if (shape_of(g.element(w)) != lambda)
                throw std::logic_error("grid entry " + g.element(w).to_string() + " does not have shape " + lambda.to_string());
            if (std::find(seen.begin(), seen.end(), w) != seen.end())
                throw std::logic_error("grid entry " + g.element(w).to_string() + " repeats");
            seen.push_back(w);
            out.grid[static_cast<size_t>(i)][static_cast<size_t>(j)] = w;
        }
    return out;
}

HeckeElt z_element(int w, const IndexMap& imap, const KLTable& table) {
    const SymmetricGroup& g = *table.group();
    const auto pos = imap.locate(w);
    if (!pos) throw std::invalid_argument(g.element(w).to_string() + " does not lie in the grid for " + imap.lambda.to_string());
    const int wl = imap.longest;
    const int a = g.mul(imap.x[static_cast<size_t>(pos->first)], wl);
    const int b = g.mul(wl, g.inverse(imap.x[static_cast<size_t>(pos->second)]));
    HeckeElt prod = mul(HeckeElt::basis_element(table.group(), Basis::C, a), HeckeElt::basis_element(table.group(), Basis::C, b), table);
    const Laurent scale = Laurent::monomial(g.sign(wl), g.length(wl));
    const Laurent poincare = young_data(imap.lambda).poincare;
    HeckeElt out(table.group(), Basis::C);
    for (int z : prod.support()) out.coeff_ref(z) = div_exact(scale * prod.coeff(z), poincare);
    return out;
}

BaseChange base_change(const TableauPair& pair, const IndexMap& imap, const KLTable& table) {
    const SymmetricGroup& g = *table.group();
    const Partition lambda = pair.shape();
    if (lambda != imap.lambda) throw std::invalid_argument("index map is for a different partition");
    BaseChange out;
    out.pair = pair;
    out.i = imap.tableau_index(pair.s);
    out.j = imap.tableau_index(pair.t);
    out.expansion = convert_basis(murphy_element(pair, MurphyVariant::y, table), Basis::C, table);
    std::optional<int> leading;
    for (int w : out.expansion.support()) {
        const Laurent& c = out.expansion.coeff(w);
        const Partition shape = shape_of(g.element(w));
        if (shape == lambda) {
            if (c.is_one()) {
                if (leading) throw ClassificationError("two same-shape terms with coefficient 1", w);
                leading = w;
            } else if (c.min_exp() >= 1) {
                out.same_shape.emplace_back(w, c);
            } else {
                throw ClassificationError("same-shape coefficient " + c.to_string() + " is not in vZ[v]", w);
            }
        } else if (lambda.dominated_by(shape)) {
            out.higher.emplace_back(w, c);
        } else {
            throw ClassificationError("term of shape " + shape.to_string() + " does not dominate " + lambda.to_string(), w);
        }
    }
    if (!leading) throw ClassificationError("no same-shape term with coefficient 1", -1);
    out.leading = *leading;
    const int expected = imap.grid[static_cast<size_t>(out.i)][static_cast<size_t>(out.j)];
    if (out.leading != expected)
        throw ClassificationError("leading term differs from grid entry " + g.element(expected).to_string(), out.leading);
    return out;
}

// Determinants

bool is_unit(const Laurent& p) {
    if (p.size() != 1) return false;
    const Integer& c = p.terms().front().coeff;
    return c.is_one() || c == Integer(-1);
}

Laurent bareiss_determinant(LaurentMatrix m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant needs a square matrix");
    int sign = 1;
    Laurent prev = 1;
    for (size_t k = 0; k < n; ++k) {
        size_t p = k;
        while (p < n && m[p][k].is_zero()) ++p;
        if (p == n) return Laurent();
        if (p != k) {
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Laurent num = m[i][j] * m[k][k];
                num -= m[i][k] * m[k][j];
                m[i][j] = div_exact(num, prev);
            }
            m[i][k] = Laurent();
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

std::optional<std::string> check_equal_span(const Partition& lambda, const KLTable& table) {
    const SymmetricGroup& g = *table.group();
    const IdealBasis basis = ideal_basis(lambda, table);
    if (basis.murphy.size() != basis.kl.size())
        return "cardinalities differ: " + std::to_string(basis.murphy.size()) + " Murphy vs " + std::to_string(basis.kl.size()) + " KL";
    std::vector<int> column(static_cast<size_t>(g.size()), -1);
    for (size_t k = 0; k < basis.kl.size(); ++k) column[static_cast<size_t>(basis.kl[k])] = static_cast<int>(k);
    LaurentMatrix m;
    for (const auto& pair : basis.murphy) {
        const HeckeElt c = convert_basis(murphy_element(pair, MurphyVariant::y, table), Basis::C, table);
        std::vector<Laurent> row(basis.kl.size());
        for (int w : c.support()) {
            if (column[static_cast<size_t>(w)] < 0)
                return "Murphy element for " + pair.s.to_string() + "," + pair.t.to_string() + " leaves the ideal at " + g.element(w).to_string();
            row[static_cast<size_t>(column[static_cast<size_t>(w)])] = c.coeff(w);
        }
        m.push_back(std::move(row));
    }
    const Laurent det = bareiss_determinant(std::move(m));
    if (!is_unit(det)) return "change-of-basis determinant " + det.to_string() + " is not a unit";
    return std::nullopt;
}

}  // namespace cellkit
