#include "ctrep/valuation_lemma.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ctrep/errors.hpp"

namespace ctrep {

namespace {

/// Coefficient vectors of the generators over the union of their supports.
std::vector<RatVector> coefficient_rows(std::span<const PuiseuxPoly> polys) {
    std::set<Rational> exponents;
    for (const auto& p : polys)
        for (const auto& [e, c] : p.exponent_terms()) exponents.insert(e);
    std::vector<RatVector> rows;
    rows.reserve(polys.size());
    for (const auto& p : polys) {
        RatVector row;
        row.reserve(exponents.size());
        for (const auto& e : exponents) row.push_back(p.coefficient_at(e));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<ExtValuation> values_recursive(std::vector<PuiseuxPoly> gens) {
    std::vector<ExtValuation> out{ExtValuation::infinity()};
    while (!gens.empty()) {
        for (const auto& g : gens)
            if (g.is_zero()) throw DependentGeneratorsError("generators satisfy an integer relation");
        std::stable_sort(gens.begin(), gens.end(), [](const PuiseuxPoly& a, const PuiseuxPoly& b) {
            return a.valuation() < b.valuation();
        });
        const Rational lowest = gens.front().valuation().value();
        out.emplace_back(lowest);

        RatVector residues;
        residues.reserve(gens.size());
        for (const auto& g : gens) residues.push_back(residue_at(g, lowest));
        std::vector<PuiseuxPoly> next;
        for (const auto& p : integer_kernel(residues)) next.push_back(integer_combination(gens, p));
        gens = std::move(next);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

IntMatrix integer_kernel(std::span<const Rational> coeffs) {
    if (coeffs.empty()) throw PreconditionError("integer_kernel of an empty list");
    const std::size_t r = coeffs.size();
    const Integer scale = common_denominator(RatVector(coeffs.begin(), coeffs.end()));

    // Rows [a_i | e_i]; reducing the first column leaves the kernel in the tails.
    IntMatrix rows(r, IntVector(r + 1, Integer(0)));
    bool all_zero = true;
    for (std::size_t i = 0; i < r; ++i) {
        const Rational scaled = coeffs[i] * Rational(scale);
        rows[i][0] = scaled.numerator();
        rows[i][i + 1] = 1;
        if (!scaled.is_zero()) all_zero = false;
    }
    IntMatrix basis;
    if (all_zero) {
        for (auto& row : rows) basis.emplace_back(row.begin() + 1, row.end());
        return basis;
    }
    for (auto& row : hermite_rows(std::move(rows)))
        if (row[0] == 0) basis.emplace_back(row.begin() + 1, row.end());
    return hermite_rows(std::move(basis));
}

PuiseuxPoly integer_combination(std::span<const PuiseuxPoly> generators, const IntVector& p) {
    if (p.size() != generators.size()) throw DomainError("coefficient vector length mismatch");
    PuiseuxPoly sum;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) sum += generators[i] * PuiseuxPoly(Rational(p[i]));
    return sum;
}

std::vector<ExtValuation> value_set(const SubgroupBasis& basis) {
    if (basis.generators.empty()) throw PreconditionError("value_set needs at least one generator");
    return values_recursive(basis.generators);
}

SubgroupBasis lattice_basis(std::span<const PuiseuxPoly> generators) {
    SubgroupBasis out;
    if (generators.empty()) return out;
    std::set<Rational> exponent_set;
    for (const auto& g : generators)
        for (const auto& [e, c] : g.exponent_terms()) exponent_set.insert(e);
    const std::vector<Rational> exponents(exponent_set.begin(), exponent_set.end());
    if (exponents.empty()) return out;

    const auto rows = coefficient_rows(generators);
    RatVector flat;
    for (const auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
    const Integer scale = common_denominator(flat);

    IntMatrix ints;
    for (const auto& row : rows) {
        IntVector v;
        for (const auto& x : row) v.push_back((x * Rational(scale)).numerator());
        ints.push_back(std::move(v));
    }
    for (const auto& row : hermite_rows(std::move(ints))) {
        PuiseuxPoly g;
        for (std::size_t c = 0; c < row.size(); ++c)
            if (row[c] != 0) g += PuiseuxPoly::monomial(Rational(row[c], scale), exponents[c]);
        out.generators.push_back(std::move(g));
    }
    return out;
}

bool in_integer_span(const PuiseuxPoly& z, const SubgroupBasis& basis) {
    if (basis.generators.empty()) return z.is_zero();
    std::vector<PuiseuxPoly> all = basis.generators;
    all.push_back(z);
    auto rows = coefficient_rows(all);
    const RatVector rhs = std::move(rows.back());
    rows.pop_back();
    const auto solution = solve_rational(rows, rhs);
    if (!solution.consistent) return false;
    if (!solution.unique) throw DependentGeneratorsError("subgroup generators are linearly dependent");
    return std::all_of(solution.coefficients.begin(), solution.coefficients.end(),
                       [](const Rational& k) { return k.is_integer(); });
}

CosetBound coset_separation_bound(const CosetSpec& spec) {
    if (in_integer_span(spec.offset, spec.subgroup))
        throw CosetMembershipError("offset " + spec.offset.str() + " lies in the subgroup");
    std::vector<PuiseuxPoly> gens{spec.offset};
    gens.insert(gens.end(), spec.subgroup.generators.begin(), spec.subgroup.generators.end());

    CosetBound out;
    out.enlarged = lattice_basis(gens);
    out.values = value_set(out.enlarged);
    // values ends in ∞ and the offset is non-zero, so a finite value exists.
    const Rational top = out.values[out.values.size() - 2].value();
    const Integer n = top.ceil();
    out.level = n < 0 ? 0UL : n.get_ui();
    return out;
}

} // namespace ctrep
