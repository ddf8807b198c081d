#include "cellkit/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace cellkit {

Laurent::Laurent(Integer constant) {
    if (!constant.is_zero()) terms_.push_back({0, std::move(constant)});
}

Laurent Laurent::monomial(Integer c, int exp) {
    Laurent out;
    if (!c.is_zero()) out.terms_.push_back({exp, std::move(c)});
    return out;
}

Laurent Laurent::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
    Laurent out;
    for (auto& t : terms) {
        if (!out.terms_.empty() && out.terms_.back().exp == t.exp) {
            out.terms_.back().coeff += t.coeff;
            if (out.terms_.back().coeff.is_zero()) out.terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            out.terms_.push_back(std::move(t));
        }
    }
    return out;
}

int Laurent::min_exp() const {
    if (terms_.empty()) throw std::domain_error("min_exp of the zero polynomial");
    return terms_.front().exp;
}

int Laurent::max_exp() const {
    if (terms_.empty()) throw std::domain_error("max_exp of the zero polynomial");
    return terms_.back().exp;
}

Integer Laurent::coeff(int exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp, [](const Term& t, int e) { return t.exp < e; });
    if (it != terms_.end() && it->exp == exp) return it->coeff;
    return Integer();
}

Laurent Laurent::bar() const {
    Laurent out;
    out.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) out.terms_.push_back({-it->exp, it->coeff});
    return out;
}

Laurent Laurent::shifted(int k) const {
    Laurent out = *this;
    for (auto& t : out.terms_) t.exp += k;
    return out;
}

Laurent Laurent::negative_part() const {
    Laurent out;
    for (const auto& t : terms_)
        if (t.exp < 0) out.terms_.push_back(t);
    return out;
}

Integer Laurent::at_one() const {
    Integer sum;
    for (const auto& t : terms_) sum += t.coeff;
    return sum;
}

Laurent Laurent::operator-() const {
    Laurent out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

namespace {

// Merges sorted term lists: out = a + sign * b.
std::vector<Laurent::Term> merge(const std::vector<Laurent::Term>& a, const std::vector<Laurent::Term>& b,
                                 bool negate_b) {
    std::vector<Laurent::Term> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].exp < b[j].exp)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].exp < a[i].exp) {
            out.push_back({b[j].exp, negate_b ? -b[j].coeff : b[j].coeff});
            ++j;
        } else {
            Integer c = a[i].coeff;
            if (negate_b) c -= b[j].coeff;
            else c += b[j].coeff;
            if (!c.is_zero()) out.push_back({a[i].exp, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Laurent& Laurent::operator+=(const Laurent& rhs) {
    if (rhs.terms_.empty()) return *this;
    if (terms_.empty()) {
        terms_ = rhs.terms_;
        return *this;
    }
    terms_ = merge(terms_, rhs.terms_, false);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& rhs) {
    if (rhs.terms_.empty()) return *this;
    terms_ = merge(terms_, rhs.terms_, true);
    return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent out;
    if (a.is_zero() || b.is_zero()) return out;
    if (a.terms_.size() == 1 || b.terms_.size() == 1) {
        const Laurent& mono = a.terms_.size() == 1 ? a : b;
        const Laurent& other = a.terms_.size() == 1 ? b : a;
        const auto& m = mono.terms_[0];
        out.terms_.reserve(other.terms_.size());
        for (const auto& t : other.terms_) out.terms_.push_back({t.exp + m.exp, t.coeff * m.coeff});
        return out;
    }
    const int lo = a.terms_.front().exp + b.terms_.front().exp;
    const int hi = a.terms_.back().exp + b.terms_.back().exp;
    std::vector<Integer> dense(static_cast<size_t>(hi - lo + 1));
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) dense[static_cast<size_t>(x.exp + y.exp - lo)].add_product(x.coeff, y.coeff);
    for (size_t k = 0; k < dense.size(); ++k)
        if (!dense[k].is_zero()) out.terms_.push_back({lo + static_cast<int>(k), std::move(dense[k])});
    return out;
}

Laurent& Laurent::operator*=(const Laurent& rhs) { return *this = *this * rhs; }

Laurent& Laurent::operator*=(const Integer& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

void Laurent::add_product(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return;
    *this += a * b;
}

void Laurent::add_scaled(const Integer& c, const Laurent& a) {
    if (c.is_zero() || a.is_zero()) return;
    if (c.is_one()) {
        *this += a;
        return;
    }
    *this += a * c;
}

std::string Laurent::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        const bool negative = t.coeff.sign() < 0;
        const Integer mag = negative ? -t.coeff : t.coeff;
        std::string mono;
        if (t.exp == 1) mono = "v";
        else if (t.exp != 0) mono = "v^" + std::to_string(t.exp);
        std::string body;
        if (t.exp == 0) body = mag.to_string();
        else if (mag.is_one()) body = mono;
        else body = mag.to_string() + mono;
        if (first) out += (negative ? "-" : "") + body;
        else out += (negative ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

Laurent Laurent::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty Laurent polynomial");
    if (s == "0") return {};

    std::vector<Term> terms;
    size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (pos != 0) {
            throw std::invalid_argument("expected '+' or '-' in: " + s);
        }
        size_t end = pos;
        while (end < s.size() && !((s[end] == '+' || s[end] == '-') && end > pos && s[end - 1] != '^')) ++end;
        std::string body = s.substr(pos, end - pos);
        pos = end;
        if (body.empty()) throw std::invalid_argument("empty term in: " + s);

        Integer coeff = 1;
        int exp = 0;
        size_t vpos = body.find('v');
        std::string cpart = vpos == std::string::npos ? body : body.substr(0, vpos);
        if (!cpart.empty() && cpart.back() == '*') cpart.pop_back();
        if (!cpart.empty()) coeff = Integer::from_string(cpart);
        else if (vpos == std::string::npos) throw std::invalid_argument("bad term in: " + s);
        if (vpos != std::string::npos) {
            std::string epart = body.substr(vpos + 1);
            if (epart.empty()) exp = 1;
            else if (epart[0] == '^') {
                try {
                    size_t used = 0;
                    exp = std::stoi(epart.substr(1), &used);
                    if (used + 1 != epart.size()) throw std::invalid_argument("trailing");
                } catch (const std::exception&) {
                    throw std::invalid_argument("bad exponent in: " + s);
                }
            } else {
                throw std::invalid_argument("bad term in: " + s);
            }
        }
        if (sign < 0) coeff = -coeff;
        terms.push_back({exp, std::move(coeff)});
    }
    return from_terms(std::move(terms));
}

Laurent div_exact(const Laurent& a, const Laurent& b) {
    auto q = try_div_exact(a, b);
    if (!q) throw DivisionFailure("(" + a.to_string() + ") is not divisible by (" + b.to_string() + ") in Z[v,v^-1]");
    return std::move(*q);
}

std::optional<Laurent> try_div_exact(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (a.is_zero()) return Laurent();
    const int lowest = a.min_exp() - b.min_exp();
    const auto& lead = b.terms().back();
    Laurent rem = a;
    std::vector<Laurent::Term> quotient;
    while (!rem.is_zero()) {
        const auto& top = rem.terms().back();
        const int e = top.exp - lead.exp;
        if (e < lowest || !top.coeff.divisible_by(lead.coeff)) return std::nullopt;
        Laurent step = Laurent::monomial(top.coeff.div_exact(lead.coeff), e);
        quotient.push_back(step.terms()[0]);
        rem -= step * b;
    }
    return Laurent::from_terms(std::move(quotient));
}

std::ostream& operator<<(std::ostream& os, const Laurent& p) { return os << p.to_string(); }

void to_json(nlohmann::json& j, const Laurent& p) {
    j = nlohmann::json::array();
    for (const auto& t : p.terms()) j.push_back(nlohmann::json::array({t.exp, t.coeff.to_string()}));
}

void from_json(const nlohmann::json& j, Laurent& p) {
    if (!j.is_array()) throw std::invalid_argument("Laurent JSON must be an array");
    std::vector<Laurent::Term> terms;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("Laurent JSON term must be a pair");
        terms.push_back({pair[0].get<int>(), Integer::from_string(pair[1].get<std::string>())});
    }
    p = Laurent::from_terms(std::move(terms));
}

// BiLaurent

namespace {

bool bi_less(const BiLaurent::Term& a, const BiLaurent::Term& b) {
    return a.exp_v != b.exp_v ? a.exp_v < b.exp_v : a.exp_w < b.exp_w;
}

}  // namespace

BiLaurent BiLaurent::in_v(const Laurent& p) {
    BiLaurent out;
    for (const auto& t : p.terms()) out.terms_.push_back({t.exp, 0, t.coeff});
    return out;
}

BiLaurent BiLaurent::in_w(const Laurent& p) {
    BiLaurent out;
    for (const auto& t : p.terms()) out.terms_.push_back({0, t.exp, t.coeff});
    return out;
}

BiLaurent BiLaurent::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), bi_less);
    BiLaurent out;
    for (auto& t : terms) {
        if (!out.terms_.empty() && out.terms_.back().exp_v == t.exp_v && out.terms_.back().exp_w == t.exp_w) {
            out.terms_.back().coeff += t.coeff;
            if (out.terms_.back().coeff.is_zero()) out.terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            out.terms_.push_back(std::move(t));
        }
    }
    return out;
}

BiLaurent& BiLaurent::operator+=(const BiLaurent& rhs) {
    std::vector<Term> all = terms_;
    all.insert(all.end(), rhs.terms_.begin(), rhs.terms_.end());
    return *this = from_terms(std::move(all));
}

BiLaurent& BiLaurent::operator-=(const BiLaurent& rhs) {
    std::vector<Term> all = terms_;
    for (const auto& t : rhs.terms_) all.push_back({t.exp_v, t.exp_w, -t.coeff});
    return *this = from_terms(std::move(all));
}

BiLaurent operator*(const BiLaurent& a, const BiLaurent& b) {
    std::vector<BiLaurent::Term> all;
    all.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) all.push_back({x.exp_v + y.exp_v, x.exp_w + y.exp_w, x.coeff * y.coeff});
    return BiLaurent::from_terms(std::move(all));
}

void BiLaurent::add_outer(const Laurent& in_w_part, const Laurent& in_v_part) {
    if (in_w_part.is_zero() || in_v_part.is_zero()) return;
    std::vector<Term> all = terms_;
    for (const auto& x : in_v_part.terms())
        for (const auto& y : in_w_part.terms()) all.push_back({x.exp, y.exp, x.coeff * y.coeff});
    *this = from_terms(std::move(all));
}

std::string BiLaurent::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        os << t.coeff << "*v^" << t.exp_v << "*w^" << t.exp_w;
    }
    return os.str();
}

}  // namespace cellkit
