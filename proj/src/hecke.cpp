#include "cellkit/hecke.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace cellkit {

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::T: return "T";
        case Basis::Cprime: return "C'";
        case Basis::C: return "C";
    }
    return "?";
}

// HeckeElt

HeckeElt::HeckeElt(GroupPtr group, Basis basis)
    : group_(std::move(group)), basis_(basis), coeffs_(static_cast<size_t>(group_->size())) {}

HeckeElt HeckeElt::basis_element(GroupPtr group, Basis basis, int w, Laurent coeff) {
    HeckeElt h(std::move(group), basis);
    h.coeffs_[static_cast<size_t>(w)] = std::move(coeff);
    return h;
}

bool HeckeElt::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

std::vector<int> HeckeElt::support() const {
    std::vector<int> out;
    for (size_t w = 0; w < coeffs_.size(); ++w)
        if (!coeffs_[w].is_zero()) out.push_back(static_cast<int>(w));
    return out;
}

void HeckeElt::check_compatible(const HeckeElt& rhs) const {
    if (basis_ != rhs.basis_) throw std::invalid_argument("basis mismatch: " + basis_name(basis_) + " vs " + basis_name(rhs.basis_));
    if (group_->n() != rhs.group_->n()) throw std::invalid_argument("rank mismatch in Hecke arithmetic");
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& rhs) {
    check_compatible(rhs);
    for (size_t w = 0; w < coeffs_.size(); ++w)
        if (!rhs.coeffs_[w].is_zero()) coeffs_[w] += rhs.coeffs_[w];
    return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& rhs) {
    check_compatible(rhs);
    for (size_t w = 0; w < coeffs_.size(); ++w)
        if (!rhs.coeffs_[w].is_zero()) coeffs_[w] -= rhs.coeffs_[w];
    return *this;
}

HeckeElt& HeckeElt::operator*=(const Laurent& c) {
    for (auto& x : coeffs_)
        if (!x.is_zero()) x *= c;
    return *this;
}

bool operator==(const HeckeElt& a, const HeckeElt& b) {
    if (a.basis_ != b.basis_ || a.n() != b.n()) return false;
    return a.coeffs_ == b.coeffs_;
}

std::string HeckeElt::to_string() const {
    std::string out;
    const std::string tag = basis_ == Basis::Cprime ? "C'" : basis_name(basis_);
    for (int w : support()) {
        const Laurent& c = coeffs_[static_cast<size_t>(w)];
        if (!out.empty()) out += " + ";
        if (!c.is_one()) {
            if (c.size() == 1) out += c.to_string() + "*";
            else out += "(" + c.to_string() + ")*";
        }
        out += tag + group_->element(w).to_string();
    }
    return out.empty() ? "0" : out;
}

// T-basis arithmetic

namespace {

const Laurent& v_minus_vinv() {
    static const Laurent value = Laurent::v(1) - Laurent::v(-1);
    return value;
}

const Laurent& v_plus_vinv() {
    static const Laurent value = Laurent::v(1) + Laurent::v(-1);
    return value;
}

// out += T_s * in, all in the T-basis.
void add_t_left(const SymmetricGroup& g, int i, const std::vector<Laurent>& in, std::vector<Laurent>& out) {
    for (int y = 0; y < g.size(); ++y) {
        const Laurent& c = in[static_cast<size_t>(y)];
        if (c.is_zero()) continue;
        const int sy = g.left_mul(i, y);
        out[static_cast<size_t>(sy)] += c;
        if (g.length(sy) < g.length(y)) out[static_cast<size_t>(y)].add_product(v_minus_vinv(), c);
    }
}

void add_t_right(const SymmetricGroup& g, int i, const std::vector<Laurent>& in, std::vector<Laurent>& out) {
    for (int y = 0; y < g.size(); ++y) {
        const Laurent& c = in[static_cast<size_t>(y)];
        if (c.is_zero()) continue;
        const int ys = g.right_mul(y, i);
        out[static_cast<size_t>(ys)] += c;
        if (g.length(ys) < g.length(y)) out[static_cast<size_t>(y)].add_product(v_minus_vinv(), c);
    }
}

void require_basis(const HeckeElt& h, Basis b, const char* what) {
    if (h.basis() != b) throw std::invalid_argument(std::string(what) + " needs an element in the " + basis_name(b) + "-basis");
}

}  // namespace

HeckeElt t_left_mul(int i, const HeckeElt& h) {
    require_basis(h, Basis::T, "t_left_mul");
    HeckeElt out(h.group(), Basis::T);
    add_t_left(*h.group(), i, h.coeffs(), out.coeffs());
    return out;
}

HeckeElt t_right_mul(const HeckeElt& h, int i) {
    require_basis(h, Basis::T, "t_right_mul");
    HeckeElt out(h.group(), Basis::T);
    add_t_right(*h.group(), i, h.coeffs(), out.coeffs());
    return out;
}

HeckeElt t_mul(const HeckeElt& a, const HeckeElt& b) {
    require_basis(a, Basis::T, "t_mul");
    require_basis(b, Basis::T, "t_mul");
    if (a.n() != b.n()) throw std::invalid_argument("rank mismatch in t_mul");
    const SymmetricGroup& g = *a.group();
    HeckeElt out(a.group(), Basis::T);
    std::vector<Laurent> cur, next(static_cast<size_t>(g.size()));
    for (int x : a.support()) {
        cur = b.coeffs();
        const auto& word = g.word(x);
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            for (auto& c : next) c = Laurent();
            add_t_left(g, *it, cur, next);
            std::swap(cur, next);
        }
        const Laurent& ax = a.coeff(x);
        for (size_t w = 0; w < cur.size(); ++w)
            if (!cur[w].is_zero()) out.coeffs()[w].add_product(ax, cur[w]);
    }
    return out;
}

// Involutions

HeckeElt bar_of_T(GroupPtr group, int w) {
    static std::mutex mutex;
    static std::map<int, std::vector<HeckeElt>> memo;
    std::lock_guard lock(mutex);
    auto& table = memo[group->n()];
    if (table.empty()) {
        const SymmetricGroup& g = *group;
        table.reserve(static_cast<size_t>(g.size()));
        table.push_back(HeckeElt::basis_element(group, Basis::T, g.identity()));
        for (int x = 1; x < g.size(); ++x) {
            // bar(T_x) = T_s^{-1} bar(T_{sx}) with T_s^{-1} = T_s - (v - v^-1).
            const int i = g.first_left_descent(x);
            const HeckeElt& prev = table[static_cast<size_t>(g.left_mul(i, x))];
            HeckeElt next(group, Basis::T);
            add_t_left(g, i, prev.coeffs(), next.coeffs());
            for (int y = 0; y < g.size(); ++y)
                if (!prev.coeff(y).is_zero()) next.coeff_ref(y).add_product(-v_minus_vinv(), prev.coeff(y));
            table.push_back(std::move(next));
        }
    }
    return table[static_cast<size_t>(w)];
}

HeckeElt apply_involution(const HeckeElt& h, Involution kind) {
    require_basis(h, Basis::T, "apply_involution");
    const SymmetricGroup& g = *h.group();
    HeckeElt out(h.group(), Basis::T);
    switch (kind) {
        case Involution::j:
            for (int w : h.support()) {
                Laurent c = h.coeff(w).bar();
                out.coeff_ref(w) = g.sign(w) > 0 ? std::move(c) : -c;
            }
            break;
        case Involution::flat:
            for (int w : h.support()) out.coeff_ref(g.inverse(w)) = h.coeff(w);
            break;
        case Involution::bar:
            for (int w : h.support()) {
                const Laurent c = h.coeff(w).bar();
                const HeckeElt b = bar_of_T(h.group(), w);
                for (int y : b.support()) out.coeff_ref(y).add_product(c, b.coeff(y));
            }
            break;
        case Involution::dagger:
            // bar = j o dagger and j is an involution.
            return apply_involution(apply_involution(h, Involution::bar), Involution::j);
    }
    return out;
}

// KL table

std::shared_ptr<KLTable> KLTable::build(int n, Descent choice) {
    std::shared_ptr<KLTable> table(new KLTable());
    table->group_ = SymmetricGroup::get(n);
    const SymmetricGroup& g = *table->group_;
    const size_t N = static_cast<size_t>(g.size());
    table->p_.assign(N, std::vector<Laurent>(N));
    table->mu_.assign(N, {});
    table->p_[0][0] = 1;
    const Laurent vinv = Laurent::v(-1);
    for (int w = 1; w < g.size(); ++w) {
        int i = g.first_left_descent(w);
        if (choice == Descent::last)
            for (int k = g.rank(); k >= 1; --k)
                if (g.is_left_descent(k, w)) {
                    i = k;
                    break;
                }
        const int y = g.left_mul(i, w);
        const auto& cy = table->p_[static_cast<size_t>(y)];
        auto& cw = table->p_[static_cast<size_t>(w)];
        // C'_s C'_y = (T_s + v^-1) C'_y, then remove sum mu(z,y) C'_z over sz < z.
        add_t_left(g, i, cy, cw);
        for (size_t u = 0; u < N; ++u)
            if (!cy[u].is_zero()) cw[u].add_product(vinv, cy[u]);
        for (auto [z, m] : table->mu_[static_cast<size_t>(y)]) {
            if (!g.is_left_descent(i, z)) continue;
            const auto& cz = table->p_[static_cast<size_t>(z)];
            const Laurent scale(-m);
            for (size_t u = 0; u < N; ++u)
                if (!cz[u].is_zero()) cw[u].add_product(scale, cz[u]);
        }
        if (!cw[static_cast<size_t>(w)].is_one()) throw std::logic_error("KL recursion lost unitriangularity");
        for (size_t u = 0; u < N; ++u)
            if (static_cast<int>(u) != w && !cw[u].in_negative_part())
                throw std::logic_error("KL recursion produced p_{y,w} outside A_<0");
        for (int z = 0; z < w; ++z) {
            const Integer m = cw[static_cast<size_t>(z)].coeff(-1);
            if (!m.is_zero()) table->mu_[static_cast<size_t>(w)].emplace_back(z, static_cast<int>(m.small_value()));
        }
    }
    return table;
}

std::shared_ptr<KLTable> KLTable::from_polynomials(int n, std::vector<std::vector<Laurent>> p) {
    std::shared_ptr<KLTable> table(new KLTable());
    table->group_ = SymmetricGroup::get(n);
    const size_t N = static_cast<size_t>(table->group_->size());
    if (p.size() != N) throw std::invalid_argument("KL table has the wrong number of columns");
    for (const auto& col : p)
        if (col.size() != N) throw std::invalid_argument("KL table column has the wrong size");
    table->p_ = std::move(p);
    table->rebuild_mu();
    return table;
}

void KLTable::rebuild_mu() {
    const size_t N = p_.size();
    mu_.assign(N, {});
    for (size_t w = 0; w < N; ++w)
        for (size_t z = 0; z < w; ++z) {
            const Integer m = p_[w][z].coeff(-1);
            if (!m.is_zero()) mu_[w].emplace_back(static_cast<int>(z), static_cast<int>(m.small_value()));
        }
}

int KLTable::mu(int y, int w) const {
    for (auto [z, m] : mu_[static_cast<size_t>(w)])
        if (z == y) return m;
    return 0;
}

void KLTable::inject_mu(int y, int w, int value) {
    if (y >= w) throw std::invalid_argument("mu injection needs y < w in index order");
    auto& list = mu_[static_cast<size_t>(w)];
    for (auto it = list.begin(); it != list.end(); ++it)
        if (it->first == y) {
            if (value == 0) list.erase(it);
            else it->second = value;
            return;
        }
    if (value == 0) return;
    auto it = list.begin();
    while (it != list.end() && it->first < y) ++it;
    list.insert(it, {y, value});
}

// KL bases

namespace {

// T-coefficients of the basis element b_w of the given KL basis.
std::vector<Laurent> kl_column(int w, Basis kind, const KLTable& table) {
    const auto& col = table.column(w);
    if (kind == Basis::Cprime) return col;
    const SymmetricGroup& g = *table.group();
    std::vector<Laurent> out(col.size());
    for (int y = 0; y < g.size(); ++y) {
        const Laurent& c = col[static_cast<size_t>(y)];
        if (c.is_zero()) continue;
        Laurent b = c.bar();
        out[static_cast<size_t>(y)] = g.sign(y) * g.sign(w) > 0 ? std::move(b) : -b;
    }
    return out;
}

}  // namespace

HeckeElt kl_element(int w, Basis kind, const KLTable& table) {
    if (kind == Basis::T) throw std::invalid_argument("kl_element needs the C or C' basis");
    HeckeElt out(table.group(), Basis::T);
    out.coeffs() = kl_column(w, kind, table);
    return out;
}

HeckeElt convert_basis(const HeckeElt& h, Basis target, const KLTable& table) {
    if (h.n() != table.n()) throw std::invalid_argument("KL table rank does not match element");
    if (h.basis() == target) return h;
    const SymmetricGroup& g = *table.group();
    HeckeElt in_t(h.group(), Basis::T);
    if (h.basis() == Basis::T) {
        in_t = h;
    } else {
        for (int w : h.support()) {
            const auto col = kl_column(w, h.basis(), table);
            for (int y = 0; y <= w; ++y)
                if (!col[static_cast<size_t>(y)].is_zero()) in_t.coeff_ref(y).add_product(h.coeff(w), col[static_cast<size_t>(y)]);
        }
    }
    if (target == Basis::T) return in_t;
    // Unitriangular elimination from the top: b_w = T_w + lower-index terms.
    HeckeElt out(h.group(), target);
    auto& rest = in_t.coeffs();
    for (int w = g.size() - 1; w >= 0; --w) {
        if (rest[static_cast<size_t>(w)].is_zero()) continue;
        const Laurent c = rest[static_cast<size_t>(w)];
        out.coeff_ref(w) = c;
        const auto col = kl_column(w, target, table);
        const Laurent neg = -c;
        for (int y = 0; y <= w; ++y)
            if (!col[static_cast<size_t>(y)].is_zero()) rest[static_cast<size_t>(y)].add_product(neg, col[static_cast<size_t>(y)]);
    }
    return out;
}

HeckeElt mul(const HeckeElt& a, const HeckeElt& b, const KLTable& table) {
    HeckeElt prod = t_mul(convert_basis(a, Basis::T, table), convert_basis(b, Basis::T, table));
    return convert_basis(prod, a.basis(), table);
}

void cprime_left_mul(int i, const std::vector<Laurent>& in, std::vector<Laurent>& out, const KLTable& table) {
    const SymmetricGroup& g = *table.group();
    for (auto& c : out) c = Laurent();
    for (int y = 0; y < g.size(); ++y) {
        const Laurent& c = in[static_cast<size_t>(y)];
        if (c.is_zero()) continue;
        const int sy = g.left_mul(i, y);
        if (g.length(sy) > g.length(y)) {
            out[static_cast<size_t>(sy)] += c;
            for (auto [z, m] : table.mu_list(y))
                if (g.is_left_descent(i, z)) out[static_cast<size_t>(z)].add_scaled(m, c);
        } else {
            out[static_cast<size_t>(y)].add_product(v_plus_vinv(), c);
        }
    }
}

std::vector<Laurent> h_constants(int x, int y, const KLTable& table) {
    const HeckeElt prod = t_mul(kl_element(x, Basis::Cprime, table), kl_element(y, Basis::Cprime, table));
    return convert_basis(prod, Basis::Cprime, table).coeffs();
}

std::vector<Laurent> h_s_row(int i, int y, const KLTable& table) {
    const size_t N = static_cast<size_t>(table.group()->size());
    std::vector<Laurent> in(N), out(N);
    in[static_cast<size_t>(y)] = 1;
    cprime_left_mul(i, in, out, table);
    return out;
}

Laurent tau(const HeckeElt& h) {
    require_basis(h, Basis::T, "tau");
    return h.coeff(h.group()->identity());
}

}  // namespace cellkit
