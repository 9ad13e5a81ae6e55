#pragma once

#include <span>
#include <vector>

#include "ctrep/lattice.hpp"
#include "ctrep/puiseux.hpp"

namespace ctrep {

/// Ordered generators x_1..x_r of a subgroup D of the Puiseux field,
/// expected to be Z-linearly independent.
struct SubgroupBasis {
    std::vector<PuiseuxPoly> generators;
};

/// The coset z + C.
struct CosetSpec {
    PuiseuxPoly offset;
    SubgroupBasis subgroup;
};

/// Z-basis (row Hermite form, primitive vectors) of
/// {p ∈ Z^r : Σ p_i coeffs_i = 0}. Rank r - 1 unless every coefficient
/// vanishes, in which case the standard basis is returned.
IntMatrix integer_kernel(std::span<const Rational> coeffs);

/// Σ p_i x_i.
PuiseuxPoly integer_combination(std::span<const PuiseuxPoly> generators, const IntVector& p);

/// The exact set {v(x) : x ∈ D}, ascending with ∞ last.
///
/// Sorts the generators by valuation (stable), records v(x_1), restricts to
/// the kernel of the residue map x ↦ coefficient of t^v(x_1), and recurses
/// on a basis of that kernel. Throws DependentGeneratorsError when a zero
/// generator or a relation shows up along the way.
std::vector<ExtValuation> value_set(const SubgroupBasis& basis);

/// Z-basis of the subgroup generated by an arbitrary finite list.
SubgroupBasis lattice_basis(std::span<const PuiseuxPoly> generators);

/// Whether z lies in the Z-span of `basis`. Throws DependentGeneratorsError
/// when the basis is linearly dependent over Q.
bool in_integer_span(const PuiseuxPoly& z, const SubgroupBasis& basis);

struct CosetBound {
    /// L_n does not meet z + C.
    unsigned long level = 0;
    /// Z-basis of the enlarged group ⟨z, C⟩.
    SubgroupBasis enlarged;
    /// value_set(enlarged).
    std::vector<ExtValuation> values;
};

/// Bound n with v(y) ≤ n for every y ∈ z + C: the ceiling of the largest
/// finite valuation attained on ⟨z, C⟩ (clamped at 0). Sound, though not
/// always minimal for the coset itself. Throws CosetMembershipError when
/// z ∈ C.
CosetBound coset_separation_bound(const CosetSpec& spec);

} // namespace ctrep
