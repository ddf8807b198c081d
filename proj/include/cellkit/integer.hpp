// Arbitrary-precision integer with an inline 64-bit fast path.
//
// Values that fit in int64_t are stored inline; anything larger spills to a
// heap-allocated GMP integer.  Every operation renormalizes, so a value that
// fits in 64 bits is always stored inline and equality can compare the
// representation directly.
#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cellkit {

class Integer {
public:
    Integer() noexcept = default;
    Integer(int64_t value) noexcept : small_(value) {}  // NOLINT: implicit by design of a numeric type
    Integer(int value) noexcept : small_(value) {}      // NOLINT
    explicit Integer(const mpz_class& value);

    Integer(const Integer& other);
    Integer(Integer&& other) noexcept = default;
    Integer& operator=(const Integer& other);
    Integer& operator=(Integer&& other) noexcept = default;
    ~Integer() = default;

    /// Parses an optionally signed decimal string; throws std::invalid_argument.
    static Integer from_string(std::string_view text);

    bool is_zero() const noexcept { return !big_ && small_ == 0; }
    bool is_one() const noexcept { return !big_ && small_ == 1; }
    int sign() const noexcept;
    bool is_small() const noexcept { return !big_; }
    /// Only meaningful when is_small().
    int64_t small_value() const noexcept { return small_; }
    mpz_class to_mpz() const;
    std::string to_string() const;

    Integer operator-() const;
    Integer& operator+=(const Integer& rhs);
    Integer& operator-=(const Integer& rhs);
    Integer& operator*=(const Integer& rhs);
    /// this += a * b, the inner-loop primitive of polynomial multiplication.
    void add_product(const Integer& a, const Integer& b);

    /// True when rhs divides *this (rhs must be nonzero).
    bool divisible_by(const Integer& rhs) const;
    /// Exact quotient; precondition divisible_by(rhs).
    Integer div_exact(const Integer& rhs) const;

    friend Integer operator+(Integer lhs, const Integer& rhs) { return lhs += rhs; }
    friend Integer operator-(Integer lhs, const Integer& rhs) { return lhs -= rhs; }
    friend Integer operator*(Integer lhs, const Integer& rhs) { return lhs *= rhs; }

    friend bool operator==(const Integer& a, const Integer& b) noexcept;
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b);

private:
    void spill(const mpz_class& value);

    int64_t small_ = 0;
    std::unique_ptr<mpz_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Integer& value);

}  // namespace cellkit
