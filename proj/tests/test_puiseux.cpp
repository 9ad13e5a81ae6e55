#include <doctest.h>

#include "ctrep/errors.hpp"
#include "ctrep/json_io.hpp"
#include "ctrep/puiseux.hpp"
#include "support.hpp"

using namespace ctrep;
using testsupport::Rng;

namespace {

PuiseuxPoly P(const char* text) { return parse_series(text); }
Rational Q(const char* text) { return Rational::parse(text); }

} // namespace

TEST_SUITE("rational") {
    TEST_CASE("canonical form") {
        CHECK(Rational(Integer(4), Integer(-6)).str() == "-2/3");
        CHECK(Rational(Integer(0), Integer(5)).str() == "0");
        CHECK(Q("10/4") == Rational(Integer(5), Integer(2)));
        CHECK(Q("-7").is_integer());
        CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), DomainError);
        CHECK_THROWS_AS(Q("1/0"), ParseError);
        CHECK_THROWS_AS(Q("1/x"), ParseError);
        CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
    }

    TEST_CASE("floor, ceil, frac") {
        CHECK(Q("-3/2").floor() == -2);
        CHECK(Q("-3/2").ceil() == -1);
        CHECK(Q("7/3").frac() == Q("1/3"));
        CHECK(Q("-1/3").frac() == Q("2/3"));
    }
}

TEST_SUITE("puiseux") {
    TEST_CASE("parse and canonical representation") {
        const PuiseuxPoly t = P("t");
        CHECK(t.ramification() == 1);
        CHECK(t.terms() == PuiseuxPoly::TermMap{{1, Rational(1)}});

        const PuiseuxPoly x = P("3/2*t^(1/2) - t^2");
        CHECK(x.ramification() == 2);
        CHECK(x.terms() == PuiseuxPoly::TermMap{{1, Q("3/2")}, {4, Rational(-1)}});

        const PuiseuxPoly zero = P("0");
        CHECK(zero.is_zero());
        CHECK(zero.ramification() == 1);

        CHECK(P("t^(2/4)").ramification() == 2);
        CHECK(P("t^(3/3)") == t);
    }

    TEST_CASE("parse errors carry positions") {
        CHECK_THROWS_AS(P("3*"), ParseError);
        CHECK_THROWS_AS(P("t^(1/0)"), ParseError);
        CHECK_THROWS_AS(P("1/0"), ParseError);
        try {
            P("1 + + x");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.position() != ParseError::npos);
        }
    }

    TEST_CASE("format") {
        CHECK(P("3/2*t^(1/2) - t^2").str() == "3/2*t^(1/2) - t^2");
        CHECK(P("1 - t^2").str() == "1 - t^2");
        CHECK(P("t^(-1)").str() == "t^(-1)");
        CHECK(P("0").str() == "0");
        CHECK(P("-t").str() == "-t");
        CHECK(P("t^2 + 1").str() == "1 + t^2");
    }

    TEST_CASE("addition") {
        CHECK((P("t") + P("-t")).is_zero());
        const PuiseuxPoly s = P("t^(1/2)") + P("t^(1/3)");
        CHECK(s.ramification() == 6);
        CHECK(s.terms() == PuiseuxPoly::TermMap{{2, Rational(1)}, {3, Rational(1)}});
        CHECK(P("1 + t") + P("1 - t") == PuiseuxPoly(2));
        CHECK((P("t^(1/2) + t") - P("t^(1/2)")).ramification() == 1);
    }

    TEST_CASE("multiplication") {
        CHECK(P("1 + t") * P("1 - t") == P("1 - t^2"));
        CHECK(P("t^(1/2)") * P("t^(1/2)") == P("t"));
        CHECK((PuiseuxPoly() * P("3*t^(2/3) + 1")).is_zero());
    }

    TEST_CASE("valuation") {
        CHECK(valuation(P("0")).is_infinite());
        CHECK(valuation(P("3*t^2 - t^3")) == ExtValuation(Rational(2)));
        CHECK(valuation(P("t^(1/2) + 3*t")) == ExtValuation(Q("1/2")));
        CHECK(ExtValuation::infinity().str() == "∞");
        CHECK(ExtValuation(Rational(1)) < ExtValuation::infinity());
        CHECK((ExtValuation(Rational(1)) + ExtValuation::infinity()).is_infinite());
    }

    TEST_CASE("truncated inverse") {
        const auto a = invert_truncated(P("1 - t"), Rational(3));
        CHECK(a.value == P("1 + t + t^2"));
        CHECK(a.cutoff == Rational(3));
        CHECK(invert_truncated(P("t"), Rational(5)).value == P("t^(-1)"));
        CHECK(invert_truncated(P("2"), Rational(1)).value == P("1/2"));
        CHECK_THROWS_AS(invert_truncated(PuiseuxPoly(), Rational(1)), DomainError);
    }

    TEST_CASE("residue") {
        CHECK(residue_at(P("t^(1/2) + 3*t"), Q("1/2")) == Rational(1));
        CHECK(residue_at(P("t"), Rational(2)) == Rational(0));
        CHECK(residue_at(P("5"), Rational(0)) == Rational(5));
    }

    TEST_CASE("reduction modulo L_n") {
        CHECK(reduce_mod_threshold(P("1 + t + t^3"), 2) == P("1 + t"));
        CHECK(reduce_mod_threshold(P("1 + t^(1/2)"), 0) == P("1"));
        const PuiseuxPoly x = P("1 + t"), y = P("1 + t^(3/2)");
        const PuiseuxPoly lhs = reduce_mod_threshold(x * y, 2);
        const PuiseuxPoly rhs = reduce_mod_threshold(reduce_mod_threshold(x, 2) * reduce_mod_threshold(y, 2), 2);
        CHECK(lhs == P("1 + t + t^(3/2)"));
        CHECK(rhs == lhs);
        CHECK_THROWS_AS(reduce_mod_threshold(P("t^(-1)"), 3), PreconditionError);
    }

    TEST_CASE("json round trip") {
        const PuiseuxPoly x = P("3/2*t^(1/2) - t^2");
        const auto j = json::encode(x);
        CHECK(j.dump() == R"({"q":2,"terms":[[1,"3/2"],[4,"-1"]]})");
        CHECK(json::decode_series(j) == x);
        CHECK(json::decode_series(json::parse_document("\"1 - t^2\"")) == P("1 - t^2"));
        CHECK(json::decode_series(json::parse_document(R"({"q":2,"terms":[[2,"1"]]})")) == P("t"));
        CHECK_THROWS_AS(json::decode_series(json::parse_document(R"({"q":0,"terms":[]})")), ParseError);
    }
}

TEST_SUITE("puiseux properties") {
    TEST_CASE("parse is inverse to format") {
        Rng rng(11);
        for (int n = 0; n < 300; ++n) {
            const PuiseuxPoly x = testsupport::random_series(rng, 5, 6, 1000, -3, 4);
            CHECK(parse_series(x.str()) == x);
            CHECK(json::decode_series(json::encode(x)) == x);
        }
    }

    TEST_CASE("minimal ramification") {
        Rng rng(12);
        for (int n = 0; n < 300; ++n) {
            const PuiseuxPoly x = testsupport::random_series(rng, 5, 6, 50, -2, 3);
            PuiseuxPoly::Index g = x.ramification();
            for (const auto& [j, c] : x.terms()) {
                g = std::gcd(g, j);
                CHECK(!c.is_zero());
            }
            CHECK(g == 1);
        }
    }

    TEST_CASE("scaling by an integer keeps the valuation") {
        Rng rng(13);
        for (int n = 0; n < 200; ++n) {
            const PuiseuxPoly x = testsupport::random_nonzero_series(rng, 4, 6, 100, -2, 3);
            const long p = testsupport::uniform(rng, 1, 40) * (testsupport::uniform(rng, 0, 1) ? 1 : -1);
            CHECK(valuation(PuiseuxPoly(p) * x) == valuation(x));
        }
    }

    TEST_CASE("inverse remainder bound") {
        Rng rng(14);
        for (int n = 0; n < 150; ++n) {
            const PuiseuxPoly x = testsupport::random_nonzero_series(rng, 3, 4, 20, -1, 2);
            const Rational cutoff = testsupport::random_exponent(rng, 3, 0, 3);
            const auto inv = invert_truncated(x, cutoff);
            const PuiseuxPoly remainder = x * inv.value - PuiseuxPoly(1);
            if (!remainder.is_zero())
                CHECK(remainder.valuation().value() >= cutoff + x.valuation().value());
            for (const auto& [e, c] : inv.value.exponent_terms()) CHECK(e < cutoff);
        }
    }

    TEST_CASE("reduction is a ring homomorphism on V") {
        Rng rng(15);
        for (int n = 0; n < 200; ++n) {
            const PuiseuxPoly x = testsupport::random_series(rng, 4, 4, 30, 0, 4);
            const PuiseuxPoly y = testsupport::random_series(rng, 4, 4, 30, 0, 4);
            const unsigned long level = static_cast<unsigned long>(testsupport::uniform(rng, 0, 3));
            auto r = [&](const PuiseuxPoly& z) { return reduce_mod_threshold(z, level); };
            CHECK(r(x + y) == r(r(x) + r(y)));
            CHECK(r(x * y) == r(r(x) * r(y)));
        }
    }
}
