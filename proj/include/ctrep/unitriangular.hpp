#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ctrep/puiseux.hpp"

namespace ctrep {

/// Upper unitriangular m×m matrix over Puiseux polynomials.
///
/// Rows and columns are 1-based. The diagonal is implicitly 1 and the lower
/// triangle implicitly 0; only entries (p, q) with p < q are writable.
class UniMatrix {
public:
    /// Identity of size m ≥ 2.
    explicit UniMatrix(std::size_t m);

    /// I + value·E_pq.
    static UniMatrix elementary(std::size_t m, std::size_t p, std::size_t q, PuiseuxPoly value);

    std::size_t size() const { return size_; }
    /// Full entry access, including the implicit diagonal and lower triangle.
    PuiseuxPoly entry(std::size_t p, std::size_t q) const;
    /// Strictly upper entry; throws DomainError outside the upper triangle.
    const PuiseuxPoly& upper(std::size_t p, std::size_t q) const;
    void set(std::size_t p, std::size_t q, PuiseuxPoly value);

    bool is_identity() const;

    friend bool operator==(const UniMatrix& a, const UniMatrix& b) = default;

private:
    std::size_t slot(std::size_t p, std::size_t q) const;

    std::size_t size_;
    std::vector<PuiseuxPoly> upper_;  // row-major, strictly upper part
};

UniMatrix operator*(const UniMatrix& a, const UniMatrix& b);
/// Exact inverse by back substitution.
UniMatrix inverse(const UniMatrix& a);
/// a⁻¹ b⁻¹ a b.
UniMatrix commutator(const UniMatrix& a, const UniMatrix& b);
/// a^k for any integer k.
UniMatrix power(const UniMatrix& a, long k);

enum class GroupOp { multiply, invert, commutator };

/// Dispatches one group operation; `invert` ignores `v`. Throws DomainError
/// on size mismatch.
UniMatrix uni_group_ops(const UniMatrix& u, const UniMatrix& v, GroupOp op);

/// Largest i with U ∈ U_m^i (all entries with q - p ≤ i vanish);
/// nullopt stands for ∞ (the identity).
std::optional<std::size_t> lcs_depth(const UniMatrix& u);

/// The (p, p+i+1) entry, a homomorphism on U_m^i.
/// Throws PreconditionError when lcs_depth(U) < i, DomainError when the
/// entry is out of range.
PuiseuxPoly epsilon_entry(const UniMatrix& u, std::size_t p, std::size_t i);

/// Every entry of U - I has valuation > n. Entries must lie in V.
bool congruence_membership(const UniMatrix& u, unsigned long n);

/// Least n with congruence_membership false; nullopt for the identity.
std::optional<unsigned long> congruence_level(const UniMatrix& u);

/// Entry-wise reduction modulo L_n.
UniMatrix reduce_matrix_mod(const UniMatrix& u, unsigned long n);

/// Data witnessing that ζΓ misses the level-n congruence subgroup.
struct SeparationCertificate {
    unsigned long level = 0;
    std::size_t row = 0;
    std::size_t depth = 0;
    PuiseuxPoly offset;  // ε(ζ)
    PuiseuxPoly step;    // ε(γ)
};

/// Separates the coset ζ⟨γ⟩ from a congruence subgroup.
///
/// i = lcs_depth(ζ), p = first row with ε(ζ) ≠ 0, and the level is the
/// coset bound for ε(ζ) + Z·ε(γ). For every integer k, ζγ^k then fails
/// congruence membership at that level.
///
/// Throws PreconditionError when ζ = I, when ζ and γ do not commute, when
/// γ ∉ U_m^i, when an entry leaves V, or when ε(ζ) ∈ Z·ε(γ).
SeparationCertificate central_coset_separator(const UniMatrix& zeta, const UniMatrix& gamma);

/// Hilbert symbol at the real place: -1 iff a < 0 and b < 0.
/// Throws PreconditionError on a zero argument.
int hilbert_symbol_real(const Rational& a, const Rational& b);

/// True iff diag(x, 1/x, 1) and diag(x, 1, 1/x) admit no commuting lifts to
/// the double cover, i.e. iff (x, x)_∞ = -1.
bool commuting_lift_obstruction(const Rational& x);

} // namespace ctrep
