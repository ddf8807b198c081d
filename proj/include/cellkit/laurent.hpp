// Exact arithmetic in A = Z[v, v^-1] and in the two-variable ring
// Z[v, v^-1, w, w^-1] used when comparing products with a second indeterminate.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cellkit/integer.hpp"

namespace cellkit {

/// Raised when a quotient of Laurent polynomials does not exist in A.
class DivisionFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A Laurent polynomial with integer coefficients.
///
/// Terms are kept sorted by exponent with no zero coefficients, so two equal
/// polynomials have identical term lists and the zero polynomial is empty.
class Laurent {
public:
    struct Term {
        int exp;
        Integer coeff;
        friend bool operator==(const Term&, const Term&) = default;
    };

    Laurent() = default;
    Laurent(Integer constant);  // NOLINT: constants embed implicitly
    Laurent(int constant) : Laurent(Integer(constant)) {}  // NOLINT

    /// c * v^exp
    static Laurent monomial(Integer c, int exp);
    /// v^exp
    static Laurent v(int exp = 1) { return monomial(1, exp); }
    /// Builds from (exp, coeff) pairs in any order; duplicates are summed.
    static Laurent from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_one() const noexcept { return terms_.size() == 1 && terms_[0].exp == 0 && terms_[0].coeff.is_one(); }
    size_t size() const noexcept { return terms_.size(); }

    /// Extreme exponents; throw std::domain_error on the zero polynomial.
    int min_exp() const;
    int max_exp() const;
    Integer coeff(int exp) const;
    Integer constant_term() const { return coeff(0); }

    /// Membership in v^-1 Z[v^-1] (A_{<0}); the zero polynomial belongs.
    bool in_negative_part() const { return is_zero() || max_exp() < 0; }
    /// Membership in v Z[v] (A_{>0}); the zero polynomial belongs.
    bool in_positive_part() const { return is_zero() || min_exp() > 0; }
    /// Membership in Z[v].
    bool is_polynomial() const { return is_zero() || min_exp() >= 0; }

    /// v -> v^-1
    Laurent bar() const;
    /// Multiplication by v^k.
    Laurent shifted(int k) const;
    /// Terms with exponent < 0.
    Laurent negative_part() const;
    /// Value at v = 1.
    Integer at_one() const;

    Laurent operator-() const;
    Laurent& operator+=(const Laurent& rhs);
    Laurent& operator-=(const Laurent& rhs);
    Laurent& operator*=(const Laurent& rhs);
    Laurent& operator*=(const Integer& c);
    /// this += a * b without materializing the product.
    void add_product(const Laurent& a, const Laurent& b);
    /// this += c * a
    void add_scaled(const Integer& c, const Laurent& a);

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    friend Laurent operator*(Laurent a, const Integer& c) { return a *= c; }
    friend Laurent operator*(const Integer& c, Laurent a) { return a *= c; }
    friend Laurent operator*(Laurent a, int c) { return a *= Integer(c); }
    friend Laurent operator*(int c, Laurent a) { return a *= Integer(c); }
    friend bool operator==(const Laurent&, const Laurent&) = default;

    /// Canonical text, ascending exponents: "v^-3 + 2 + v^2", "0" for zero.
    std::string to_string() const;
    /// Accepts the canonical text plus "*" between coefficient and v.
    static Laurent parse(std::string_view text);

private:
    std::vector<Term> terms_;
};

/// Exact quotient a / b in A; throws DivisionFailure when none exists.
Laurent div_exact(const Laurent& a, const Laurent& b);
/// Non-throwing variant.
std::optional<Laurent> try_div_exact(const Laurent& a, const Laurent& b);

std::ostream& operator<<(std::ostream& os, const Laurent& p);

/// JSON: array of [exponent, "coefficient"] pairs.
void to_json(nlohmann::json& j, const Laurent& p);
void from_json(const nlohmann::json& j, Laurent& p);

/// Laurent polynomial in two indeterminates v and w ("v-breve").
class BiLaurent {
public:
    struct Term {
        int exp_v;
        int exp_w;
        Integer coeff;
        friend bool operator==(const Term&, const Term&) = default;
    };

    BiLaurent() = default;
    /// Embedding of A into the first variable.
    static BiLaurent in_v(const Laurent& p);
    /// The same polynomial with v replaced by the second indeterminate.
    static BiLaurent in_w(const Laurent& p);
    static BiLaurent from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    BiLaurent& operator+=(const BiLaurent& rhs);
    BiLaurent& operator-=(const BiLaurent& rhs);
    friend BiLaurent operator+(BiLaurent a, const BiLaurent& b) { return a += b; }
    friend BiLaurent operator-(BiLaurent a, const BiLaurent& b) { return a -= b; }
    friend BiLaurent operator*(const BiLaurent& a, const BiLaurent& b);
    /// this += p(w) * q(v): the outer product of a w-polynomial and a v-polynomial.
    void add_outer(const Laurent& in_w_part, const Laurent& in_v_part);
    friend bool operator==(const BiLaurent&, const BiLaurent&) = default;

    std::string to_string() const;

private:
    std::vector<Term> terms_;  // sorted by (exp_v, exp_w)
};

}  // namespace cellkit
