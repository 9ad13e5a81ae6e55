#include "ctrep/puiseux.hpp"

#include "ctrep/errors.hpp"

namespace ctrep {

// ---------------------------------------------------------------- ExtValuation

const Rational& ExtValuation::value() const {
    if (!value_) throw PreconditionError("valuation is infinite");
    return *value_;
}

std::string ExtValuation::str() const { return value_ ? value_->str() : "∞"; }

ExtValuation operator+(const ExtValuation& a, const ExtValuation& b) {
    if (a.is_infinite() || b.is_infinite()) return ExtValuation::infinity();
    return ExtValuation(*a.value_ + *b.value_);
}

std::strong_ordering operator<=>(const ExtValuation& a, const ExtValuation& b) {
    if (a.is_infinite() || b.is_infinite())
        return a.is_infinite() <=> b.is_infinite();
    return *a.value_ <=> *b.value_;
}

// ---------------------------------------------------------------- PuiseuxPoly

namespace {

Rational exponent_of(PuiseuxPoly::Index j, PuiseuxPoly::Index q) {
    return Rational(Integer(static_cast<long>(j)), Integer(static_cast<long>(q)));
}

} // namespace

PuiseuxPoly::PuiseuxPoly(const Rational& constant) {
    if (!constant.is_zero()) terms_.emplace(0, constant);
}

PuiseuxPoly PuiseuxPoly::monomial(const Rational& coeff, const Rational& exponent) {
    PuiseuxPoly out;
    if (coeff.is_zero()) return out;
    out.ramification_ = to_int64(exponent.denominator());
    out.terms_.emplace(to_int64(exponent.numerator()), coeff);
    return out;
}

PuiseuxPoly PuiseuxPoly::from_terms(Index ramification, TermMap terms) {
    if (ramification <= 0) throw DomainError("ramification must be positive");
    PuiseuxPoly out;
    out.ramification_ = ramification;
    out.terms_ = std::move(terms);
    out.canonicalize();
    return out;
}

void PuiseuxPoly::canonicalize() {
    std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
    if (terms_.empty()) {
        ramification_ = 1;
        return;
    }
    Index g = ramification_;
    for (const auto& [j, c] : terms_) g = gcd64(g, j);
    if (g <= 1) return;
    TermMap reduced;
    for (auto& [j, c] : terms_) reduced.emplace_hint(reduced.end(), j / g, std::move(c));
    terms_ = std::move(reduced);
    ramification_ /= g;
}

PuiseuxPoly::TermMap PuiseuxPoly::rescaled(Index q) const {
    if (q == ramification_) return terms_;
    const Index factor = q / ramification_;
    TermMap out;
    for (const auto& [j, c] : terms_) {
        Index scaled = 0;
        if (__builtin_mul_overflow(j, factor, &scaled)) throw DomainError("exponent overflow");
        out.emplace_hint(out.end(), scaled, c);
    }
    return out;
}

std::vector<std::pair<Rational, Rational>> PuiseuxPoly::exponent_terms() const {
    std::vector<std::pair<Rational, Rational>> out;
    out.reserve(terms_.size());
    for (const auto& [j, c] : terms_) out.emplace_back(exponent_of(j, ramification_), c);
    return out;
}

ExtValuation PuiseuxPoly::valuation() const {
    if (terms_.empty()) return ExtValuation::infinity();
    return ExtValuation(exponent_of(terms_.begin()->first, ramification_));
}

Rational PuiseuxPoly::degree() const {
    if (terms_.empty()) throw PreconditionError("degree of zero");
    return exponent_of(terms_.rbegin()->first, ramification_);
}

Rational PuiseuxPoly::coefficient_at(const Rational& exponent) const {
    const Rational scaled = exponent * Rational(Integer(static_cast<long>(ramification_)));
    if (!scaled.is_integer() || !scaled.numerator().fits_slong_p()) return Rational(0);
    const auto it = terms_.find(scaled.numerator().get_si());
    return it == terms_.end() ? Rational(0) : it->second;
}

PuiseuxPoly PuiseuxPoly::truncated(const Rational& bound, bool inclusive) const {
    PuiseuxPoly out;
    out.ramification_ = ramification_;
    for (const auto& [j, c] : terms_) {
        const Rational e = exponent_of(j, ramification_);
        if (e < bound || (inclusive && e == bound)) out.terms_.emplace_hint(out.terms_.end(), j, c);
        else break;
    }
    out.canonicalize();
    return out;
}

PuiseuxPoly PuiseuxPoly::shifted(const Rational& shift) const {
    if (is_zero()) return *this;
    const Index q = lcm64(ramification_, to_int64(shift.denominator()));
    const Index offset = to_int64(shift.numerator()) * (q / to_int64(shift.denominator()));
    TermMap out;
    for (auto& [j, c] : rescaled(q)) out.emplace_hint(out.end(), j + offset, c);
    return from_terms(q, std::move(out));
}

PuiseuxPoly PuiseuxPoly::operator-() const {
    PuiseuxPoly out = *this;
    for (auto& [j, c] : out.terms_) c = -c;
    return out;
}

PuiseuxPoly& PuiseuxPoly::operator+=(const PuiseuxPoly& rhs) {
    if (rhs.is_zero()) return *this;
    const Index q = lcm64(ramification_, rhs.ramification_);
    TermMap merged = rescaled(q);
    for (const auto& [j, c] : rhs.rescaled(q)) merged[j] += c;
    ramification_ = q;
    terms_ = std::move(merged);
    canonicalize();
    return *this;
}

PuiseuxPoly& PuiseuxPoly::operator-=(const PuiseuxPoly& rhs) { return *this += -rhs; }

PuiseuxPoly& PuiseuxPoly::operator*=(const PuiseuxPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b) {
    if (a.is_zero() || b.is_zero()) return PuiseuxPoly();
    const PuiseuxPoly::Index q = lcm64(a.ramification_, b.ramification_);
    const auto lhs = a.rescaled(q);
    const auto rhs = b.rescaled(q);
    PuiseuxPoly::TermMap product;
    for (const auto& [i, c] : lhs)
        for (const auto& [j, d] : rhs) product[i + j] += c * d;
    return PuiseuxPoly::from_terms(q, std::move(product));
}

std::string PuiseuxPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [exponent, coeff] : exponent_terms()) {
        const bool negative = coeff.sign() < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Rational magnitude = coeff.abs();
        if (exponent.is_zero()) {
            out += magnitude.str();
            continue;
        }
        if (magnitude != Rational(1)) out += magnitude.str() + "*";
        out += "t";
        if (exponent == Rational(1)) continue;
        if (exponent.is_integer() && exponent.sign() > 0) out += "^" + exponent.str();
        else out += "^(" + exponent.str() + ")";
    }
    return out;
}

// ---------------------------------------------------------------- free functions

PuiseuxApprox invert_truncated(const PuiseuxPoly& x, const Rational& cutoff) {
    if (x.is_zero()) throw DomainError("inverse of zero series");
    const Rational v = x.valuation().value();
    const Rational lead = x.coefficient_at(v);
    // x = lead * t^v * (1 - w) with every exponent of w positive.
    const PuiseuxPoly unit = x.shifted(-v) * PuiseuxPoly(Rational(1) / lead);
    const PuiseuxPoly w = PuiseuxPoly(1) - unit;
    const Rational bound = cutoff + v;

    PuiseuxPoly geometric;
    PuiseuxPoly power(1);
    while (!power.is_zero()) {
        power = power.truncated(bound, false);
        geometric += power;
        power = power * w;
    }
    return PuiseuxApprox{geometric.shifted(-v) * PuiseuxPoly(Rational(1) / lead), cutoff};
}

PuiseuxPoly reduce_mod_threshold(const PuiseuxPoly& x, unsigned long n) {
    if (x.valuation() < ExtValuation(Rational(0)))
        throw PreconditionError("series " + x.str() + " has negative valuation");
    return x.truncated(Rational(Integer(n)), true);
}

} // namespace ctrep
