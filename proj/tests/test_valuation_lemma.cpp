#include <doctest.h>

#include <set>

#include "ctrep/errors.hpp"
#include "ctrep/lattice.hpp"
#include "ctrep/valuation_lemma.hpp"
#include "support.hpp"

using namespace ctrep;
using testsupport::Rng;

namespace {

PuiseuxPoly P(const char* text) { return parse_series(text); }
Rational Q(const char* text) { return Rational::parse(text); }

std::vector<ExtValuation> values_of(std::initializer_list<const char*> gens) {
    SubgroupBasis b;
    for (const char* g : gens) b.generators.push_back(P(g));
    return value_set(b);
}

std::vector<ExtValuation> expected(std::initializer_list<const char*> finite) {
    std::vector<ExtValuation> out;
    for (const char* v : finite) out.emplace_back(Q(v));
    out.push_back(ExtValuation::infinity());
    return out;
}

Rational dot(const IntVector& p, const std::vector<Rational>& c) {
    Rational s;
    for (std::size_t i = 0; i < p.size(); ++i) s += Rational(p[i]) * c[i];
    return s;
}

bool in_span(const IntMatrix& basis, const IntVector& v) {
    std::vector<RatVector> columns;
    for (const auto& b : basis) {
        RatVector col;
        for (const auto& x : b) col.emplace_back(x);
        columns.push_back(col);
    }
    RatVector rhs;
    for (const auto& x : v) rhs.emplace_back(x);
    const auto sol = solve_rational(columns, rhs);
    if (!sol.consistent) return false;
    for (const auto& c : sol.coefficients)
        if (!c.is_integer()) return false;
    return true;
}

/// Every p in the box annihilating c lies in the lattice spanned by basis.
void check_kernel_complete(const IntMatrix& basis, const std::vector<Rational>& c, long bound) {
    std::vector<long> p(c.size(), -bound);
    for (;;) {
        IntVector v(p.begin(), p.end());
        if (dot(v, c) == 0) CHECK(in_span(basis, v));
        std::size_t k = 0;
        while (k < p.size() && p[k] == bound) p[k++] = -bound;
        if (k == p.size()) break;
        ++p[k];
    }
}

Integer content(const IntVector& v) {
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g;
}

} // namespace

TEST_SUITE("lattice") {
    TEST_CASE("hermite rows") {
        const IntMatrix h = hermite_rows({{Integer(2), Integer(4)}, {Integer(3), Integer(6)}});
        REQUIRE(h.size() == 1);
        CHECK(h[0] == IntVector{Integer(1), Integer(2)});
    }

    TEST_CASE("rational solve") {
        const auto sol = solve_rational({{Rational(1), Rational(0)}, {Rational(1), Rational(1)}},
                                        {Rational(3), Rational(2)});
        CHECK(sol.consistent);
        CHECK(sol.unique);
        CHECK(sol.coefficients == RatVector{Rational(1), Rational(2)});
        CHECK_FALSE(solve_rational({{Rational(1), Rational(1)}}, {Rational(1), Rational(2)}).consistent);
    }
}

TEST_SUITE("integer kernel") {
    TEST_CASE("examples") {
        const std::vector<Rational> c1{Rational(1), Rational(1)};
        const IntMatrix k1 = integer_kernel(c1);
        REQUIRE(k1.size() == 1);
        CHECK(dot(k1[0], c1) == 0);
        CHECK(content(k1[0]) == 1);
        CHECK(in_span(k1, {Integer(1), Integer(-1)}));

        const std::vector<Rational> c2{Rational(1), Rational(0)};
        const IntMatrix k2 = integer_kernel(c2);
        REQUIRE(k2.size() == 1);
        CHECK(k2[0] == IntVector{Integer(0), Integer(1)});

        const std::vector<Rational> c3{Rational(2), Rational(3), Rational(-1)};
        const IntMatrix k3 = integer_kernel(c3);
        CHECK(k3.size() == 2);
        for (const auto& v : k3) {
            CHECK(dot(v, c3) == 0);
            CHECK(content(v) == 1);
        }
        check_kernel_complete(k3, c3, 5);
    }

    TEST_CASE("all-zero coefficients give full rank") {
        const std::vector<Rational> c{Rational(0), Rational(0), Rational(0)};
        CHECK(integer_kernel(c).size() == 3);
    }

    TEST_CASE("random coefficient vectors") {
        Rng rng(21);
        for (int n = 0; n < 60; ++n) {
            std::vector<Rational> c;
            const long r = testsupport::uniform(rng, 1, 4);
            for (long i = 0; i < r; ++i) c.push_back(testsupport::random_rational(rng, 6));
            const bool nonzero = std::any_of(c.begin(), c.end(), [](const Rational& x) { return !x.is_zero(); });
            const IntMatrix k = integer_kernel(c);
            CHECK(k.size() == static_cast<std::size_t>(nonzero ? r - 1 : r));
            for (const auto& v : k) {
                CHECK(dot(v, c) == 0);
                CHECK(content(v) == 1);
            }
            if (r <= 3) check_kernel_complete(k, c, r == 3 ? 4 : 8);
        }
    }
}

TEST_SUITE("value set") {
    TEST_CASE("examples") {
        CHECK(values_of({"t"}) == expected({"1"}));
        CHECK(values_of({"t", "t + t^2"}) == expected({"1", "2"}));
        CHECK(values_of({"1", "t^(1/2)"}) == expected({"0", "1/2"}));
    }

    TEST_CASE("brute force agreement on the examples") {
        for (auto gens : std::vector<std::vector<PuiseuxPoly>>{
                 {P("t")}, {P("t"), P("t + t^2")}, {P("1"), P("t^(1/2)")}}) {
            const auto values = value_set(SubgroupBasis{gens});
            std::set<Rational> finite;
            for (const auto& v : values)
                if (!v.is_infinite()) finite.insert(v.value());
            CHECK(testsupport::brute_force_values(gens, 6) == finite);
        }
    }

    TEST_CASE("cancellation cascades") {
        CHECK(values_of({"1 + t", "1 + t + t^3"}) == expected({"0", "3"}));
        CHECK(values_of({"1", "1 + t", "1 + t + t^2"}) == expected({"0", "1", "2"}));
        CHECK(values_of({"t^(1/3) + t", "2*t^(1/3) + t^2"}) == expected({"1/3", "1"}));
    }

    TEST_CASE("dependent generators are rejected") {
        CHECK_THROWS_AS(values_of({"t", "2*t"}), DependentGeneratorsError);
        CHECK_THROWS_AS(values_of({"1 + t", "t", "1"}), DependentGeneratorsError);
        CHECK_THROWS_AS(values_of({"0"}), DependentGeneratorsError);
    }

    TEST_CASE("at most r + 1 values and soundness on random bases") {
        Rng rng(22);
        int tested = 0;
        while (tested < 80) {
            const long r = testsupport::uniform(rng, 1, 3);
            std::vector<PuiseuxPoly> gens;
            for (long i = 0; i < r; ++i) gens.push_back(testsupport::random_nonzero_series(rng, 3, 2, 3, 0, 2));
            bool dependent = false;
            testsupport::brute_force_values(gens, 2, &dependent);
            std::vector<ExtValuation> values;
            try {
                values = value_set(SubgroupBasis{gens});
            } catch (const DependentGeneratorsError&) {
                CHECK(lattice_basis(gens).generators.size() < gens.size());
                continue;
            }
            ++tested;
            CHECK_FALSE(dependent);
            CHECK(values.size() <= static_cast<std::size_t>(r + 1));
            CHECK(values.back().is_infinite());
            CHECK(std::is_sorted(values.begin(), values.end()));
            const auto brute = testsupport::brute_force_values(gens, 3);
            for (const auto& v : brute) CHECK(std::find(values.begin(), values.end(), ExtValuation(v)) != values.end());
        }
    }
}

TEST_SUITE("coset bound") {
    CosetBound bound(const char* z, std::initializer_list<const char*> gens) {
        CosetSpec spec{P(z), {}};
        for (const char* g : gens) spec.subgroup.generators.push_back(P(g));
        return coset_separation_bound(spec);
    }

    TEST_CASE("examples") {
        CHECK(bound("t^(1/2)", {"t"}).level == 1);
        CHECK(bound("t^2", {"t^2 - t^3"}).level == 3);
        // the enlarged group <1, t> has largest finite value 1
        CHECK(bound("1", {"t"}).level == 1);
        CHECK(bound("1/2", {"1"}).level == 0);
    }

    TEST_CASE("brute force soundness on the examples") {
        for (auto [z, c] : std::vector<std::pair<const char*, const char*>>{
                 {"t^(1/2)", "t"}, {"1", "t"}, {"t^2", "t^2 - t^3"}, {"1/2", "1"}}) {
            const unsigned long n = bound(z, {c}).level;
            for (long k = -50; k <= 50; ++k) {
                const PuiseuxPoly x = P(z) + PuiseuxPoly(k) * P(c);
                REQUIRE_FALSE(x.is_zero());
                CHECK(x.valuation().value() <= Rational(static_cast<long>(n)));
            }
        }
    }

    TEST_CASE("membership is rejected") {
        CHECK_THROWS_AS(bound("3*t", {"t"}), CosetMembershipError);
        CHECK_THROWS_AS(bound("t + t^2", {"t", "t^2"}), CosetMembershipError);
        CHECK_THROWS_AS(bound("0", {"t"}), CosetMembershipError);
        CHECK_NOTHROW(bound("1/2*t", {"t"}));
    }

    TEST_CASE("membership test") {
        const SubgroupBasis c{{P("t"), P("1 + t^2")}};
        CHECK(in_integer_span(P("2*t - 3 - 3*t^2"), c));
        CHECK_FALSE(in_integer_span(P("1/2*t"), c));
        CHECK_FALSE(in_integer_span(P("t^3"), c));
    }
}
