#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ctrep {

using Integer = mpz_class;

std::string to_string(const Integer& value);

/// Exact rational number in lowest terms with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(int value) : value_(value) {}
    Rational(const Integer& value) : value_(value) {}
    /// Throws DomainError when `den` is zero.
    Rational(const Integer& num, const Integer& den);

    /// Accepts `p`, `-p`, `p/q`; throws ParseError otherwise.
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Integer floor() const;
    Integer ceil() const;
    Rational abs() const;
    /// Representative of the class modulo 1, in [0, 1).
    Rational frac() const;

    std::string str() const;

    const mpq_class& raw() const { return value_; }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws DomainError on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class value_;
};

/// Non-negative gcd of two machine integers.
std::int64_t gcd64(std::int64_t a, std::int64_t b);
/// Least common multiple; throws DomainError on overflow.
std::int64_t lcm64(std::int64_t a, std::int64_t b);
/// Converts to int64, throwing DomainError when out of range.
std::int64_t to_int64(const Integer& value);

} // namespace ctrep
