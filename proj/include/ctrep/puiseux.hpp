#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ctrep/rational.hpp"

namespace ctrep {

/// Element of Q ∪ {∞}, totally ordered with ∞ on top.
class ExtValuation {
public:
    ExtValuation(Rational value) : value_(std::move(value)) {}
    static ExtValuation infinity() { return ExtValuation(); }

    bool is_infinite() const { return !value_.has_value(); }
    /// Throws PreconditionError on ∞.
    const Rational& value() const;

    /// "∞" for infinity, otherwise the rational.
    std::string str() const;

    friend ExtValuation operator+(const ExtValuation& a, const ExtValuation& b);
    friend bool operator==(const ExtValuation& a, const ExtValuation& b) = default;
    friend std::strong_ordering operator<=>(const ExtValuation& a, const ExtValuation& b);

private:
    ExtValuation() = default;
    std::optional<Rational> value_;
};

/// Finite sum  Σ_j c_j t^(j/q)  with rational coefficients.
///
/// Canonical form: no zero coefficients and q minimal, i.e.
/// gcd(q, j_1, j_2, ...) = 1. Zero is the empty sum with q = 1. Two
/// polynomials are equal iff their canonical forms coincide.
class PuiseuxPoly {
public:
    using Index = std::int64_t;
    using TermMap = std::map<Index, Rational>;

    PuiseuxPoly() = default;
    PuiseuxPoly(const Rational& constant);
    PuiseuxPoly(long constant) : PuiseuxPoly(Rational(constant)) {}
    PuiseuxPoly(int constant) : PuiseuxPoly(Rational(constant)) {}

    /// coeff * t^exponent.
    static PuiseuxPoly monomial(const Rational& coeff, const Rational& exponent);
    /// The generator t.
    static PuiseuxPoly t() { return monomial(Rational(1), Rational(1)); }
    /// Builds from raw data and canonicalizes. Requires q > 0.
    static PuiseuxPoly from_terms(Index ramification, TermMap terms);

    Index ramification() const { return ramification_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// (exponent, coefficient) pairs in ascending exponent order.
    std::vector<std::pair<Rational, Rational>> exponent_terms() const;

    ExtValuation valuation() const;
    /// Coefficient of t^exponent (zero when absent).
    Rational coefficient_at(const Rational& exponent) const;
    /// Largest exponent in the support; throws PreconditionError for zero.
    Rational degree() const;

    /// Terms with exponent < bound (or ≤ bound when `inclusive`).
    PuiseuxPoly truncated(const Rational& bound, bool inclusive) const;
    /// Multiplies by t^shift.
    PuiseuxPoly shifted(const Rational& shift) const;

    PuiseuxPoly operator-() const;
    PuiseuxPoly& operator+=(const PuiseuxPoly& rhs);
    PuiseuxPoly& operator-=(const PuiseuxPoly& rhs);
    PuiseuxPoly& operator*=(const PuiseuxPoly& rhs);

    friend PuiseuxPoly operator+(PuiseuxPoly a, const PuiseuxPoly& b) { return a += b; }
    friend PuiseuxPoly operator-(PuiseuxPoly a, const PuiseuxPoly& b) { return a -= b; }
    friend PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b);

    friend bool operator==(const PuiseuxPoly& a, const PuiseuxPoly& b) = default;

    /// Canonical text, e.g. "3/2*t^(1/2) - t^2". Parses back to *this.
    std::string str() const;

private:
    void canonicalize();
    /// Terms re-indexed at ramification `q`, a multiple of ramification().
    TermMap rescaled(Index q) const;

    Index ramification_ = 1;
    TermMap terms_;
};

/// Truncated inverse: `value` has no exponent ≥ `cutoff`.
struct PuiseuxApprox {
    PuiseuxPoly value;
    Rational cutoff;
};

/// Parses a series expression. Accepts sums of terms `c`, `c*t^(a/b)`,
/// `t^(a/b)`, `t^k`, `t`; also products, parentheses and non-negative
/// integer powers of sub-expressions. Throws ParseError with a byte offset.
PuiseuxPoly parse_series(std::string_view text);

inline std::string format_series(const PuiseuxPoly& x) { return x.str(); }

inline ExtValuation valuation(const PuiseuxPoly& x) { return x.valuation(); }

/// Coefficient of t^e in x.
inline Rational residue_at(const PuiseuxPoly& x, const Rational& e) {
    return x.coefficient_at(e);
}

/// Inverse of x to precision `cutoff`: x*value - 1 has every exponent
/// ≥ cutoff + v(x). Throws DomainError when x = 0.
PuiseuxApprox invert_truncated(const PuiseuxPoly& x, const Rational& cutoff);

/// Representative of x modulo L_n = {v > n}: keeps terms with exponent ≤ n.
/// Throws PreconditionError when v(x) < 0.
PuiseuxPoly reduce_mod_threshold(const PuiseuxPoly& x, unsigned long n);

} // namespace ctrep
