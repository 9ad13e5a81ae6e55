#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ctrep/rational.hpp"

namespace ctrep {

/// Index i of the generators a_i, b_i.
using GeneratorId = std::uint64_t;

/// Base group of a central extension.
enum class DomainTag {
    free_int,  // free abelian group A on ā_i, b̄_i; center Z
    mod_two,   // free F_2-module B; center Z/2
    rational,  // free Q-module on ā_i, b̄_i; center Q
};

std::string to_string(DomainTag tag);
/// Accepts "free-int", "mod-two", "rational" (underscores also accepted).
DomainTag parse_domain_tag(std::string_view text);

/// Finitely supported element Σ α_i ā_i + Σ β_i b̄_i of the base group.
/// Coefficients are integers (free_int), bits (mod_two) or rationals.
class SparseAbelian {
public:
    using CoeffMap = std::map<GeneratorId, Rational>;

    explicit SparseAbelian(DomainTag tag) : tag_(tag) {}
    /// Validates and normalizes coefficients for the tag.
    SparseAbelian(DomainTag tag, CoeffMap a, CoeffMap b);

    static SparseAbelian a(DomainTag tag, GeneratorId i, const Rational& coeff = Rational(1));
    static SparseAbelian b(DomainTag tag, GeneratorId i, const Rational& coeff = Rational(1));

    DomainTag tag() const { return tag_; }
    const CoeffMap& a_coeffs() const { return a_; }
    const CoeffMap& b_coeffs() const { return b_; }
    /// α_i and β_i.
    Rational alpha(GeneratorId i) const;
    Rational beta(GeneratorId i) const;
    bool is_zero() const { return a_.empty() && b_.empty(); }

    SparseAbelian operator-() const;
    SparseAbelian& operator+=(const SparseAbelian& rhs);
    friend SparseAbelian operator+(SparseAbelian x, const SparseAbelian& y) { return x += y; }
    friend SparseAbelian operator-(SparseAbelian x, const SparseAbelian& y) { return x += -y; }
    /// Scalar multiple; the scalar must be admissible for the tag.
    SparseAbelian scaled(const Rational& k) const;

    friend bool operator==(const SparseAbelian&, const SparseAbelian&) = default;

    /// e.g. "2a1 - b2", "0".
    std::string str() const;

private:
    void normalize();

    DomainTag tag_;
    CoeffMap a_;
    CoeffMap b_;
};

/// Value in the kernel of the extension: Z, Z/2, Q, or Z/n in quotients.
/// `modulus` is 0 when there is no reduction.
struct CenterScalar {
    Rational value;
    Integer modulus = 0;

    friend bool operator==(const CenterScalar&, const CenterScalar&) = default;
};

/// The 2-cocycle f(x, y) = Σ_i α_i(x) β_i(y). Throws DomainError on
/// mismatched tags.
CenterScalar cocycle_eval(const SparseAbelian& x, const SparseAbelian& y);

/// Element (n, x) of the extension with law
/// (n, x)(m, y) = (n + m + f(x, y), x + y).
class ExtElement {
public:
    /// Identity (0, 0). For free_int, a positive `modulus` selects the
    /// quotient by ⟨c^modulus⟩.
    explicit ExtElement(DomainTag tag, Integer modulus = 0);
    ExtElement(Rational center, SparseAbelian shadow, Integer modulus = 0);

    static ExtElement central_generator(DomainTag tag, Integer modulus = 0);
    static ExtElement a(DomainTag tag, GeneratorId i);
    static ExtElement b(DomainTag tag, GeneratorId i);

    DomainTag tag() const { return shadow_.tag(); }
    const CenterScalar& center() const { return center_; }
    const SparseAbelian& shadow() const { return shadow_; }
    bool is_identity() const { return center_.value.is_zero() && shadow_.is_zero(); }
    bool is_central_generator() const { return center_.value == Rational(1) && shadow_.is_zero(); }

    friend bool operator==(const ExtElement&, const ExtElement&) = default;

    /// "(n, x)".
    std::string str() const;

private:
    void reduce();

    CenterScalar center_;
    SparseAbelian shadow_;
};

ExtElement operator*(const ExtElement& g, const ExtElement& h);
ExtElement inverse(const ExtElement& g);
/// g⁻¹ h⁻¹ g h.
ExtElement commutator(const ExtElement& g, const ExtElement& h);
ExtElement power(const ExtElement& g, const Integer& k);

enum class ExtOp { multiply, invert, commutator };
ExtElement ext_group_ops(const ExtElement& g, const ExtElement& h, ExtOp op);

/// One letter of a word: a_i^e, b_i^e or c^e.
struct Letter {
    enum class Kind { a, b, c };
    Kind kind;
    GeneratorId index = 0;
    long exponent = 1;

    friend bool operator==(const Letter&, const Letter&) = default;
};

/// Product of letters, read left to right. Not freely reduced.
struct Word {
    std::vector<Letter> letters;

    friend bool operator==(const Word&, const Word&) = default;
};

Word inverse(const Word& w);
Word concat(const Word& u, const Word& v);
/// [u, v] = u⁻¹ v⁻¹ u v.
Word commutator_word(const Word& u, const Word& v);
Word letter_word(Letter::Kind kind, GeneratorId index = 0, long exponent = 1);

/// Word syntax: letters `a12`, `b3`, `c`, each with an optional `^k`
/// (k may be negative); `comm(u, v)` and parenthesized `(u)^k` groups;
/// letters separated by whitespace or `*`. Throws ParseError.
Word parse_word(std::string_view text);
/// Letters joined by spaces, e.g. "a2^-1 a1 b3^-1"; "1" for the empty word.
std::string format_word(const Word& w);

/// Image under a_i ↦ (0, ā_i), b_i ↦ (0, b̄_i), c ↦ (1, 0).
ExtElement eval_word(const Word& w, DomainTag tag, Integer modulus = 0);

struct RelationCheck {
    std::string relation;
    bool passed;
};

struct PresentationReport {
    DomainTag tag;
    std::vector<RelationCheck> checks;

    bool ok() const;
    std::vector<RelationCheck> failures() const;
};

/// Evaluates the defining relations on sampled index pairs: [a_i, b_i] = c,
/// all other generator pairs commute, c is central; for mod_two also
/// a_i² = b_i² = e; for free_int also c^k ≠ e for 1 ≤ k ≤ order_bound.
PresentationReport check_presentation(DomainTag tag,
                                      const std::vector<std::pair<GeneratorId, GeneratorId>>& samples,
                                      unsigned long order_bound = 100);

/// Orbit labels of a_i·x and b_i·x for sampled indices.
struct LabelTable {
    struct Row {
        GeneratorId id;
        std::string a_label;
        std::string b_label;
    };
    std::vector<Row> rows;
};

struct PigeonholeWitness {
    GeneratorId i, j, k;
    /// [a_j⁻¹ a_i, b_k⁻¹ b_i]
    Word word;
};

/// Lexicographically least (by table position) triple of distinct rows
/// i, j, k with aLabel_i = aLabel_j and bLabel_i = bLabel_k. The returned
/// word always evaluates to c.
std::optional<PigeonholeWitness> pigeonhole_commutator(const LabelTable& table);

/// Image in the quotient by ⟨c^n⟩. free_int only; n ≥ 1.
ExtElement quotient_center(const ExtElement& g, const Integer& n);

/// Least k in [1, bound] with g^k = e.
std::optional<unsigned long> element_order(const ExtElement& g, unsigned long bound);

/// The unique h with h^divisor = g in the Q-form of the extension.
ExtElement rational_root(const ExtElement& g, unsigned long divisor);

} // namespace ctrep
