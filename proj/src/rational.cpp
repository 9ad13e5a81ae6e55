#include "ctrep/rational.hpp"

#include <cctype>
#include <limits>
#include <numeric>

#include "ctrep/errors.hpp"

namespace ctrep {

std::string to_string(const Integer& value) { return value.get_str(); }

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

} // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num_text = body.substr(0, slash);
    const std::string_view den_text =
        slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num_text) || !all_digits(den_text))
        throw ParseError("malformed rational '" + std::string(text) + "'", 0);
    Integer num(std::string(num_text), 10);
    Integer den(std::string(den_text), 10);
    if (den == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'", text.size());
    if (negative) num = -num;
    return Rational(num, den);
}

Integer Rational::floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

Integer Rational::ceil() const {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::frac() const { return *this - Rational(floor()); }

std::string Rational::str() const { return value_.get_str(); }

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw DomainError("division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    const std::int64_t g = gcd64(a, b);
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a / g, b, &out)) throw DomainError("ramification overflow");
    return out < 0 ? -out : out;
}

std::int64_t to_int64(const Integer& value) {
    if (!value.fits_slong_p()) throw DomainError("integer out of 64-bit range: " + value.get_str());
    return value.get_si();
}

} // namespace ctrep
