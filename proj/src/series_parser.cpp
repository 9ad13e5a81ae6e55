// Recursive-descent parser for series expressions.
//
//   expr     := product (('+' | '-') product)*
//   product  := unary ('*' unary)*
//   unary    := ('+' | '-') unary | power
//   power    := atom ('^' exponent)?
//   atom     := INT ('/' INT)? | 't' | '(' expr ')'
//   exponent := INT | '-' INT | '(' ['+' | '-'] INT ('/' INT)? ')'
//
// Rational exponents are only allowed on t; negative integer exponents only
// on monomials, where the inverse is exact.

#include <cctype>

#include "ctrep/errors.hpp"
#include "ctrep/puiseux.hpp"

namespace ctrep {
namespace {

constexpr long kMaxPower = 512;

class SeriesParser {
public:
    explicit SeriesParser(std::string_view text) : text_(text) {}

    PuiseuxPoly parse() {
        skip_space();
        if (at_end()) fail("empty expression");
        PuiseuxPoly value = expr();
        skip_space();
        if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
        return value;
    }

private:
    PuiseuxPoly expr() {
        PuiseuxPoly value = product();
        for (;;) {
            skip_space();
            if (accept('+')) value += product();
            else if (accept('-')) value -= product();
            else return value;
        }
    }

    PuiseuxPoly product() {
        PuiseuxPoly value = unary();
        for (;;) {
            skip_space();
            if (!accept('*')) return value;
            value = value * unary();
        }
    }

    PuiseuxPoly unary() {
        skip_space();
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    PuiseuxPoly power() {
        skip_space();
        if (accept('t')) {
            skip_space();
            if (!accept('^')) return PuiseuxPoly::t();
            return PuiseuxPoly::monomial(Rational(1), exponent(true));
        }
        PuiseuxPoly base = atom();
        skip_space();
        if (!accept('^')) return base;
        const std::size_t where = pos_;
        const Rational e = exponent(false);
        return integer_power(base, e, where);
    }

    PuiseuxPoly atom() {
        skip_space();
        if (accept('(')) {
            PuiseuxPoly inner = expr();
            skip_space();
            expect(')');
            return inner;
        }
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            const Integer num = integer();
            skip_space();
            if (accept('/')) {
                skip_space();
                const std::size_t where = pos_;
                const Integer den = integer();
                if (den == 0) throw ParseError("zero denominator", where);
                return PuiseuxPoly(Rational(num, den));
            }
            return PuiseuxPoly(Rational(num));
        }
        if (at_end()) fail("unexpected end of input");
        fail(std::string("unexpected '") + peek() + "'");
    }

    Rational exponent(bool allow_fraction) {
        skip_space();
        if (accept('(')) {
            skip_space();
            bool negative = false;
            if (accept('-')) negative = true;
            else accept('+');
            skip_space();
            Integer num = integer();
            Integer den = 1;
            skip_space();
            if (accept('/')) {
                if (!allow_fraction) fail("fractional exponent on a non-monomial");
                skip_space();
                const std::size_t where = pos_;
                den = integer();
                if (den == 0) throw ParseError("zero denominator in exponent", where);
            }
            skip_space();
            expect(')');
            if (negative) num = -num;
            return Rational(num, den);
        }
        const bool negative = accept('-');
        skip_space();
        Integer num = integer();
        return Rational(negative ? Integer(-num) : num);
    }

    PuiseuxPoly integer_power(const PuiseuxPoly& base, const Rational& e, std::size_t where) {
        const Integer k = e.numerator();
        if (k < 0) {
            if (base.term_count() != 1) throw ParseError("negative power of a non-monomial", where);
            const auto [exp, coeff] = base.exponent_terms().front();
            PuiseuxPoly unit = PuiseuxPoly::monomial(Rational(1) / coeff, -exp);
            return integer_power(unit, -e, where);
        }
        if (k > kMaxPower) throw ParseError("exponent too large", where);
        PuiseuxPoly out(1);
        for (long i = 0; i < k.get_si(); ++i) out = out * base;
        return out;
    }

    Integer integer() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected integer");
        return Integer(std::string(text_.substr(start, pos_ - start)), 10);
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    bool accept(char ch) {
        if (at_end() || peek() != ch) return false;
        ++pos_;
        return true;
    }
    void expect(char ch) {
        if (!accept(ch)) fail(std::string("expected '") + ch + "'");
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

PuiseuxPoly parse_series(std::string_view text) { return SeriesParser(text).parse(); }

} // namespace ctrep
