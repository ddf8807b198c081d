#include "cellkit/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace cellkit {

// Perm

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int k : images_) {
        if (k < 1 || k > n() || seen[static_cast<size_t>(k)])
            throw std::invalid_argument("not a permutation: " + to_string());
        seen[static_cast<size_t>(k)] = true;
    }
}

Perm Perm::identity(int n) {
    std::vector<int> images(static_cast<size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    return Perm(std::move(images));
}

Perm Perm::simple(int n, int i) {
    if (i < 1 || i >= n) throw std::invalid_argument("generator s" + std::to_string(i) + " out of range for n=" + std::to_string(n));
    Perm s = identity(n);
    std::swap(s.images_[static_cast<size_t>(i - 1)], s.images_[static_cast<size_t>(i)]);
    return s;
}

Perm Perm::from_word(int n, const std::vector<int>& word) {
    Perm w = identity(n);
    for (int i : word) w = w * simple(n, i);
    return w;
}

Perm Perm::parse(std::string_view text, int n) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty permutation");
    if (s.front() == '[') {
        if (s.back() != ']') throw std::invalid_argument("bad permutation: " + s);
        std::vector<int> images;
        std::string body = s.substr(1, s.size() - 2);
        size_t pos = 0;
        while (pos < body.size()) {
            size_t comma = body.find(',', pos);
            if (comma == std::string::npos) comma = body.size();
            std::string item = body.substr(pos, comma - pos);
            if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                throw std::invalid_argument("bad permutation: " + s);
            images.push_back(std::stoi(item));
            pos = comma + 1;
        }
        Perm w(std::move(images));
        if (n > 0 && w.n() != n) throw std::invalid_argument("permutation " + s + " is not in S_" + std::to_string(n));
        return w;
    }
    if (n <= 0) throw std::invalid_argument("a reduced word needs the rank n: " + s);
    if (s == "1" || s == "e") return identity(n);
    std::vector<int> word;
    size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] != 's') throw std::invalid_argument("bad word: " + s);
        ++pos;
        size_t end = pos;
        while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
        if (end == pos) throw std::invalid_argument("bad word: " + s);
        word.push_back(std::stoi(s.substr(pos, end - pos)));
        pos = end;
    }
    return from_word(n, word);
}

int Perm::length() const {
    int inv = 0;
    for (size_t i = 0; i < images_.size(); ++i)
        for (size_t j = i + 1; j < images_.size(); ++j)
            if (images_[i] > images_[j]) ++inv;
    return inv;
}

Perm Perm::inverse() const {
    std::vector<int> inv(images_.size());
    for (size_t k = 0; k < images_.size(); ++k) inv[static_cast<size_t>(images_[k] - 1)] = static_cast<int>(k) + 1;
    Perm out;
    out.images_ = std::move(inv);
    return out;
}

bool Perm::has_left_descent(int i) const {
    // s_i w < w iff i+1 occurs to the left of i in one-line notation.
    for (int v : images_) {
        if (v == i) return false;
        if (v == i + 1) return true;
    }
    return false;
}

std::vector<int> Perm::right_descents() const {
    std::vector<int> out;
    for (int i = 1; i < n(); ++i)
        if (has_right_descent(i)) out.push_back(i);
    return out;
}

std::vector<int> Perm::left_descents() const {
    std::vector<int> out;
    for (int i = 1; i < n(); ++i)
        if (has_left_descent(i)) out.push_back(i);
    return out;
}

std::vector<int> Perm::reduced_word() const {
    std::vector<int> word;
    Perm w = *this;
    while (true) {
        int found = 0;
        for (int i = 1; i < n(); ++i)
            if (w.has_left_descent(i)) {
                found = i;
                break;
            }
        if (found == 0) break;
        word.push_back(found);
        w = simple(n(), found) * w;
    }
    return word;
}

Perm operator*(const Perm& x, const Perm& y) {
    if (x.n() != y.n()) throw std::invalid_argument("rank mismatch in permutation product");
    Perm out;
    out.images_.resize(y.images_.size());
    for (size_t k = 0; k < y.images_.size(); ++k) out.images_[k] = x.images_[static_cast<size_t>(y.images_[k] - 1)];
    return out;
}

std::string Perm::to_string() const {
    std::string out = "[";
    for (size_t k = 0; k < images_.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(images_[k]);
    }
    return out + "]";
}

std::string Perm::word_string() const {
    auto word = reduced_word();
    if (word.empty()) return "1";
    std::string out;
    for (int i : word) out += "s" + std::to_string(i);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Perm& w) { return os << w.to_string(); }

bool length_lex_less(const Perm& a, const Perm& b) {
    int la = a.length(), lb = b.length();
    if (la != lb) return la < lb;
    return a.images() < b.images();
}

bool bruhat_leq(const Perm& y, const Perm& w) {
    if (y.n() != w.n()) throw std::invalid_argument("rank mismatch in Bruhat comparison");
    // Walk the fixed reduced word s_{i1} s_{i2} ... of w from the left; a
    // generator is used in the subword exactly when it is a left descent of
    // what remains of y.
    Perm rest = y;
    for (int i : w.reduced_word())
        if (rest.has_left_descent(i)) rest = Perm::simple(w.n(), i) * rest;
    return rest == Perm::identity(w.n());
}

// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p <= 0) throw std::invalid_argument("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')') s += c;
    if (s.empty()) throw std::invalid_argument("empty partition");
    std::vector<int> parts;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        std::string item = s.substr(pos, comma - pos);
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw std::invalid_argument("bad partition: " + std::string(text));
        parts.push_back(std::stoi(item));
        pos = comma + 1;
    }
    std::vector<int> sorted = parts;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    if (sorted != parts) throw std::invalid_argument("partition parts must be weakly decreasing: " + std::string(text));
    return Partition(std::move(parts));
}

std::vector<Partition> Partition::all(int n) {
    std::vector<Partition> out;
    std::vector<int> current;
    auto rec = [&](auto& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            self(self, remaining - p, p);
            current.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
    std::vector<int> conj;
    if (!parts_.empty())
        for (int j = 1; j <= parts_.front(); ++j) {
            int count = 0;
            for (int p : parts_)
                if (p >= j) ++count;
            conj.push_back(count);
        }
    return Partition(std::move(conj));
}

int Partition::partial_sum(int i) const {
    int sum = 0;
    for (int k = 0; k < i && k < length(); ++k) sum += parts_[static_cast<size_t>(k)];
    return sum;
}

bool Partition::dominated_by(const Partition& other) const {
    if (size() != other.size()) throw std::invalid_argument("dominance needs partitions of the same n");
    const int len = std::max(length(), other.length());
    for (int i = 1; i <= len; ++i)
        if (partial_sum(i) > other.partial_sum(i)) return false;
    return true;
}

std::string Partition::to_string() const { return "(" + to_csv() + ")"; }

std::string Partition::to_csv() const {
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

// Tableau

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].empty()) throw std::invalid_argument("tableau rows must be nonempty");
        if (i > 0 && rows_[i].size() > rows_[i - 1].size()) throw std::invalid_argument("tableau rows must weakly decrease");
    }
    std::vector<int> all;
    for (const auto& r : rows_) all.insert(all.end(), r.begin(), r.end());
    std::sort(all.begin(), all.end());
    for (size_t k = 0; k < all.size(); ++k)
        if (all[k] != static_cast<int>(k) + 1) throw std::invalid_argument("tableau entries must be 1..n");
}

Tableau Tableau::parse(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception&) {
        throw std::invalid_argument("bad tableau: " + std::string(text));
    }
    if (!j.is_array()) throw std::invalid_argument("bad tableau: " + std::string(text));
    std::vector<std::vector<int>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) throw std::invalid_argument("bad tableau: " + std::string(text));
        rows.push_back(row.get<std::vector<int>>());
    }
    return Tableau(std::move(rows));
}

Tableau Tableau::initial(const Partition& shape) {
    std::vector<std::vector<int>> rows;
    int next = 1;
    for (int len : shape.parts()) {
        std::vector<int> row;
        for (int j = 0; j < len; ++j) row.push_back(next++);
        rows.push_back(std::move(row));
    }
    return Tableau(std::move(rows));
}

Partition Tableau::shape() const {
    std::vector<int> parts;
    for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
    return Partition(std::move(parts));
}

int Tableau::size() const {
    int n = 0;
    for (const auto& r : rows_) n += static_cast<int>(r.size());
    return n;
}

bool Tableau::is_row_standard() const {
    for (const auto& r : rows_)
        if (!std::is_sorted(r.begin(), r.end())) return false;
    return true;
}

bool Tableau::is_standard() const {
    if (!is_row_standard()) return false;
    for (size_t i = 1; i < rows_.size(); ++i)
        for (size_t j = 0; j < rows_[i].size(); ++j)
            if (rows_[i][j] <= rows_[i - 1][j]) return false;
    return true;
}

Tableau Tableau::transpose() const {
    std::vector<std::vector<int>> cols;
    if (!rows_.empty())
        for (size_t j = 0; j < rows_.front().size(); ++j) {
            std::vector<int> col;
            for (const auto& r : rows_)
                if (j < r.size()) col.push_back(r[j]);
            cols.push_back(std::move(col));
        }
    return Tableau(std::move(cols));
}

Tableau Tableau::acted_on_by(const Perm& w) const {
    if (w.n() != size()) throw std::invalid_argument("rank mismatch acting on tableau");
    auto rows = rows_;
    for (auto& r : rows)
        for (int& k : r) k = w(k);
    return Tableau(std::move(rows));
}

std::string Tableau::to_string() const {
    std::string out = "[";
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (i) out += ",";
        out += "[";
        for (size_t j = 0; j < rows_[i].size(); ++j) {
            if (j) out += ",";
            out += std::to_string(rows_[i][j]);
        }
        out += "]";
    }
    return out + "]";
}

std::ostream& operator<<(std::ostream& os, const Tableau& t) { return os << t.to_string(); }

// Young subgroups and cosets

namespace {

// Row blocks of positions [begin, end) of t^lambda, 1-based begin.
std::vector<std::pair<int, int>> row_blocks(const Partition& lambda) {
    std::vector<std::pair<int, int>> blocks;
    int start = 1;
    for (int len : lambda.parts()) {
        blocks.emplace_back(start, start + len);
        start += len;
    }
    return blocks;
}

std::vector<Perm> all_perms(int n) {
    std::vector<int> images(static_cast<size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::vector<Perm> out;
    do {
        out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

Laurent q_integer_v2(int m) {
    // 1 + v^2 + ... + v^{2(m-1)}
    std::vector<Laurent::Term> terms;
    for (int k = 0; k < m; ++k) terms.push_back({2 * k, 1});
    return Laurent::from_terms(std::move(terms));
}

}  // namespace

YoungData young_data(const Partition& lambda) {
    const int n = lambda.size();
    YoungData out;
    out.lambda = lambda;
    for (int i = 1; i < n; ++i) {
        bool is_boundary = false;
        for (int k = 1; k <= lambda.length(); ++k)
            if (lambda.partial_sum(k) == i) is_boundary = true;
        if (!is_boundary) out.generators.push_back(i);
    }
    std::vector<int> images(static_cast<size_t>(n));
    for (auto [begin, end] : row_blocks(lambda))
        for (int k = begin; k < end; ++k) images[static_cast<size_t>(k - 1)] = begin + end - 1 - k;
    out.longest = Perm(std::move(images));
    Laurent poincare = 1;
    for (int len : lambda.parts())
        for (int m = 1; m <= len; ++m) poincare *= q_integer_v2(m);
    out.poincare = poincare;
    return out;
}

std::vector<Perm> young_subgroup(const Partition& lambda) {
    const int n = lambda.size();
    std::vector<Perm> out;
    for (auto& w : all_perms(n)) {
        bool ok = true;
        for (auto [begin, end] : row_blocks(lambda))
            for (int k = begin; k < end; ++k)
                if (w(k) < begin || w(k) >= end) ok = false;
        if (ok) out.push_back(w);
    }
    std::sort(out.begin(), out.end(), length_lex_less);
    return out;
}

CosetDecomposition coset_decompose(const Perm& w, const Partition& lambda) {
    if (w.n() != lambda.size()) throw std::invalid_argument("rank mismatch in coset decomposition");
    std::vector<int> images = w.images();
    for (auto [begin, end] : row_blocks(lambda))
        std::sort(images.begin() + (begin - 1), images.begin() + (end - 1));
    Perm x(std::move(images));
    return {x, x.inverse() * w};
}

bool is_coset_rep(const Perm& w, const Partition& lambda) {
    for (auto [begin, end] : row_blocks(lambda))
        for (int k = begin; k + 1 < end; ++k)
            if (w(k) > w(k + 1)) return false;
    return true;
}

std::vector<Perm> coset_reps(const Partition& lambda) {
    std::vector<Perm> out;
    for (auto& w : all_perms(lambda.size()))
        if (is_coset_rep(w, lambda)) out.push_back(w);
    std::sort(out.begin(), out.end(), length_lex_less);
    return out;
}

Perm d_of_tableau(const Tableau& t) {
    if (!t.is_row_standard()) throw std::invalid_argument("d(t) needs a row-standard tableau: " + t.to_string());
    const Tableau base = Tableau::initial(t.shape());
    std::vector<int> images(static_cast<size_t>(t.size()));
    for (size_t i = 0; i < base.rows().size(); ++i)
        for (size_t j = 0; j < base.rows()[i].size(); ++j)
            images[static_cast<size_t>(base.rows()[i][j] - 1)] = t.rows()[i][j];
    return Perm(std::move(images));
}

std::vector<Tableau> std_tableaux(const Partition& lambda) {
    const int n = lambda.size();
    std::vector<std::vector<int>> rows(static_cast<size_t>(lambda.length()));
    std::vector<Tableau> out;
    auto rec = [&](auto& self, int next) -> void {
        if (next > n) {
            out.emplace_back(rows);
            return;
        }
        for (size_t i = 0; i < rows.size(); ++i) {
            const size_t len = rows[i].size();
            if (static_cast<int>(len) >= lambda.parts()[i]) continue;
            if (i > 0 && rows[i - 1].size() <= len) continue;
            rows[i].push_back(next);
            self(self, next + 1);
            rows[i].pop_back();
        }
    };
    rec(rec, 1);
    std::vector<std::pair<Perm, Tableau>> keyed;
    for (auto& t : out) keyed.emplace_back(d_of_tableau(t), t);
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return length_lex_less(a.first, b.first); });
    out.clear();
    for (auto& [d, t] : keyed) out.push_back(std::move(t));
    return out;
}

long long hook_length_count(const Partition& lambda) {
    const Partition conj = lambda.conjugate();
    long long num = 1;
    for (int k = 2; k <= lambda.size(); ++k) num *= k;
    long long den = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.parts()[static_cast<size_t>(i)]; ++j) {
            const int arm = lambda.parts()[static_cast<size_t>(i)] - j - 1;
            const int leg = conj.parts()[static_cast<size_t>(j)] - i - 1;
            den *= arm + leg + 1;
        }
    return num / den;
}

// Robinson-Schensted

RskResult rsk(const Perm& w) {
    std::vector<std::vector<int>> p_rows, q_rows;
    for (int k = 1; k <= w.n(); ++k) {
        int x = w(k);
        size_t r = 0;
        while (true) {
            if (r == p_rows.size()) {
                p_rows.push_back({x});
                q_rows.push_back({k});
                break;
            }
            auto& row = p_rows[r];
            auto it = std::upper_bound(row.begin(), row.end(), x);
            if (it == row.end()) {
                row.push_back(x);
                q_rows[r].push_back(k);
                break;
            }
            std::swap(x, *it);
            ++r;
        }
    }
    Tableau p(std::move(p_rows)), q(std::move(q_rows));
    return {p.shape(), std::move(p), std::move(q)};
}

Perm rsk_inverse(const Tableau& insertion, const Tableau& recording) {
    if (insertion.shape() != recording.shape())
        throw std::invalid_argument("RSK inverse needs tableaux of equal shape");
    if (!insertion.is_standard() || !recording.is_standard())
        throw std::invalid_argument("RSK inverse needs standard tableaux");
    auto p = insertion.rows();
    auto q = recording.rows();
    const int n = insertion.size();
    std::vector<int> images(static_cast<size_t>(n));
    for (int k = n; k >= 1; --k) {
        size_t r = 0;
        while (q[r].empty() || q[r].back() != k) ++r;
        q[r].pop_back();
        int x = p[r].back();
        p[r].pop_back();
        for (size_t rr = r; rr-- > 0;) {
            auto& row = p[rr];
            auto it = std::lower_bound(row.begin(), row.end(), x);
            --it;  // largest entry smaller than x
            std::swap(x, *it);
        }
        images[static_cast<size_t>(k - 1)] = x;
        if (p[r].empty()) {
            p.erase(p.begin() + static_cast<long>(r));
            q.erase(q.begin() + static_cast<long>(r));
        }
    }
    return Perm(std::move(images));
}

}  // namespace cellkit
