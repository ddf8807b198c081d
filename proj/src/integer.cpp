#include "cellkit/integer.hpp"

#include <ostream>
#include <stdexcept>

namespace cellkit {

namespace {

mpz_class mpz_from_int64(int64_t value) {
    mpz_class out;
    // mpz_set_si takes a long, which is 64 bits on the supported platforms.
    static_assert(sizeof(long) == sizeof(int64_t));
    mpz_set_si(out.get_mpz_t(), static_cast<long>(value));
    return out;
}

}  // namespace

Integer::Integer(const mpz_class& value) { spill(value); }

Integer::Integer(const Integer& other) : small_(other.small_) {
    if (other.big_) big_ = std::make_unique<mpz_class>(*other.big_);
}

Integer& Integer::operator=(const Integer& other) {
    if (this == &other) return *this;
    small_ = other.small_;
    if (other.big_) {
        if (big_) *big_ = *other.big_;
        else big_ = std::make_unique<mpz_class>(*other.big_);
    } else {
        big_.reset();
    }
    return *this;
}

Integer Integer::from_string(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("bad integer literal: " + s);
    for (size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer literal: " + s);
    if (s[0] == '+') s.erase(0, 1);
    return Integer(mpz_class(s, 10));
}

int Integer::sign() const noexcept {
    if (big_) return sgn(*big_);
    return (small_ > 0) - (small_ < 0);
}

mpz_class Integer::to_mpz() const { return big_ ? *big_ : mpz_from_int64(small_); }

std::string Integer::to_string() const { return big_ ? big_->get_str(10) : std::to_string(small_); }

void Integer::spill(const mpz_class& value) {
    if (mpz_fits_slong_p(value.get_mpz_t())) {
        small_ = mpz_get_si(value.get_mpz_t());
        big_.reset();
    } else {
        small_ = 0;
        if (big_) *big_ = value;
        else big_ = std::make_unique<mpz_class>(value);
    }
}

Integer Integer::operator-() const {
    if (!big_ && small_ != INT64_MIN) return Integer(-small_);
    return Integer(mpz_class(-to_mpz()));
}

Integer& Integer::operator+=(const Integer& rhs) {
    if (!big_ && !rhs.big_) {
        int64_t out;
        if (!__builtin_add_overflow(small_, rhs.small_, &out)) {
            small_ = out;
            return *this;
        }
    }
    spill(to_mpz() + rhs.to_mpz());
    return *this;
}

Integer& Integer::operator-=(const Integer& rhs) {
    if (!big_ && !rhs.big_) {
        int64_t out;
        if (!__builtin_sub_overflow(small_, rhs.small_, &out)) {
            small_ = out;
            return *this;
        }
    }
    spill(to_mpz() - rhs.to_mpz());
    return *this;
}

Integer& Integer::operator*=(const Integer& rhs) {
    if (!big_ && !rhs.big_) {
        int64_t out;
        if (!__builtin_mul_overflow(small_, rhs.small_, &out)) {
            small_ = out;
            return *this;
        }
    }
    spill(to_mpz() * rhs.to_mpz());
    return *this;
}

void Integer::add_product(const Integer& a, const Integer& b) {
    if (!big_ && !a.big_ && !b.big_) {
        int64_t prod, sum;
        if (!__builtin_mul_overflow(a.small_, b.small_, &prod) &&
            !__builtin_add_overflow(small_, prod, &sum)) {
            small_ = sum;
            return;
        }
    }
    spill(to_mpz() + a.to_mpz() * b.to_mpz());
}

bool Integer::divisible_by(const Integer& rhs) const {
    if (rhs.is_zero()) throw std::domain_error("division by zero");
    if (!big_ && !rhs.big_) {
        if (rhs.small_ == -1) return true;
        return small_ % rhs.small_ == 0;
    }
    return mpz_divisible_p(to_mpz().get_mpz_t(), rhs.to_mpz().get_mpz_t()) != 0;
}

Integer Integer::div_exact(const Integer& rhs) const {
    if (rhs.is_zero()) throw std::domain_error("division by zero");
    if (!big_ && !rhs.big_ && !(small_ == INT64_MIN && rhs.small_ == -1)) return Integer(small_ / rhs.small_);
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), to_mpz().get_mpz_t(), rhs.to_mpz().get_mpz_t());
    return Integer(q);
}

bool operator==(const Integer& a, const Integer& b) noexcept {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // normalized: a spilled value never fits in int64
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
    int c = cmp(a.to_mpz(), b.to_mpz());
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Integer& value) { return os << value.to_string(); }

}  // namespace cellkit
