#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ctrep/rational.hpp"
#include "ctrep/unitriangular.hpp"

namespace ctrep {

// ---------------------------------------------------------------- Q-vector spaces

/// Finite Q-combination of abstract basis symbols e_1, e_2, ...; the model
/// of R as a Q-vector space.
class FormalReal {
public:
    using Symbol = std::uint32_t;

    FormalReal() = default;
    explicit FormalReal(std::map<Symbol, Rational> coeffs);
    static FormalReal basis(Symbol s, const Rational& coeff = Rational(1));

    const std::map<Symbol, Rational>& coeffs() const { return coeffs_; }
    Rational coordinate(Symbol s) const;
    bool is_zero() const { return coeffs_.empty(); }

    FormalReal operator-() const;
    FormalReal& operator+=(const FormalReal& rhs);
    friend FormalReal operator+(FormalReal x, const FormalReal& y) { return x += y; }
    friend FormalReal operator-(FormalReal x, const FormalReal& y) { return x += -y; }
    friend bool operator==(const FormalReal&, const FormalReal&) = default;

    std::string str() const;

private:
    std::map<Symbol, Rational> coeffs_;
};

/// Rational in [0, 1), standing for an element of Q/Z.
class RationalModOne {
public:
    RationalModOne() = default;
    explicit RationalModOne(const Rational& value) : value_(value.frac()) {}
    const Rational& value() const { return value_; }
    bool is_zero() const { return value_.is_zero(); }
    friend RationalModOne operator+(const RationalModOne& a, const RationalModOne& b) {
        return RationalModOne(a.value_ + b.value_);
    }
    friend bool operator==(const RationalModOne&, const RationalModOne&) = default;

private:
    Rational value_;
};

/// Element of R/Z ≅ Q/Z ⊕ R.
struct CircleElement {
    RationalModOne torsion;
    FormalReal free;

    friend CircleElement operator+(const CircleElement& a, const CircleElement& b) {
        return {a.torsion + b.torsion, a.free + b.free};
    }
    friend bool operator==(const CircleElement&, const CircleElement&) = default;
};

// ---------------------------------------------------------------- separating families

/// Unitriangular matrix over the finite-representative ring V/L_n.
struct ReducedMatrix {
    UniMatrix value;
    unsigned long level;

    friend bool operator==(const ReducedMatrix&, const ReducedMatrix&) = default;
};

/// Countable target of a family member: Q, Q/Z, or U_m(V/L_n).
using TargetValue = std::variant<Rational, RationalModOne, ReducedMatrix>;

bool is_trivial(const TargetValue& v);
/// Group law of the target; both values must hold the same alternative.
TargetValue combine(const TargetValue& a, const TargetValue& b);
std::string to_string(const TargetValue& v);

/// Finite list of homomorphisms out of a group, each into a countable
/// target; the group is non-trivially separated when every non-identity
/// element has a member with non-trivial value.
template <class Element>
struct SeparatingFamily {
    struct Member {
        std::string name;
        std::function<TargetValue(const Element&)> eval;
    };

    std::function<Element(const Element&, const Element&)> compose;
    std::function<bool(const Element&)> is_identity;
    std::vector<Member> members;
};

struct SeparationReport {
    bool separates = true;
    /// Per sample: index of the first member with non-trivial value.
    /// Identity samples carry no witness and do not count as failures.
    std::vector<std::optional<std::size_t>> witnesses;
};

template <class Element>
SeparationReport check_separates(const SeparatingFamily<Element>& family,
                                 const std::vector<Element>& samples) {
    SeparationReport report;
    for (const auto& g : samples) {
        std::optional<std::size_t> witness;
        for (std::size_t m = 0; m < family.members.size() && !witness; ++m)
            if (!is_trivial(family.members[m].eval(g))) witness = m;
        if (!witness && !family.is_identity(g)) report.separates = false;
        report.witnesses.push_back(witness);
    }
    return report;
}

/// member(g h) = member(g) · member(h) for every member and pair.
template <class Element>
bool check_homomorphism(const SeparatingFamily<Element>& family,
                        const std::vector<std::pair<Element, Element>>& pairs) {
    for (const auto& [g, h] : pairs) {
        const Element gh = family.compose(g, h);
        for (const auto& m : family.members)
            if (combine(m.eval(g), m.eval(h)) != m.eval(gh)) return false;
    }
    return true;
}

/// Members evaluate the first family on the first coordinate and the second
/// on the second.
template <class A, class B>
SeparatingFamily<std::pair<A, B>> product_family(const SeparatingFamily<A>& first,
                                                 const SeparatingFamily<B>& second) {
    using Pair = std::pair<A, B>;
    SeparatingFamily<Pair> out;
    out.compose = [fa = first.compose, fb = second.compose](const Pair& x, const Pair& y) {
        return Pair{fa(x.first, y.first), fb(x.second, y.second)};
    };
    out.is_identity = [ia = first.is_identity, ib = second.is_identity](const Pair& x) {
        return ia(x.first) && ib(x.second);
    };
    for (const auto& m : first.members)
        out.members.push_back({"first." + m.name, [e = m.eval](const Pair& x) { return e(x.first); }});
    for (const auto& m : second.members)
        out.members.push_back({"second." + m.name, [e = m.eval](const Pair& x) { return e(x.second); }});
    return out;
}

/// Concatenation of stage families over the same group, members renamed
/// "stage<k>.<name>". Finite truncation of an inverse system.
template <class Element>
SeparatingFamily<Element> tower_family(const std::vector<SeparatingFamily<Element>>& stages) {
    SeparatingFamily<Element> out;
    if (stages.empty()) return out;
    out.compose = stages.front().compose;
    out.is_identity = stages.front().is_identity;
    for (std::size_t s = 0; s < stages.size(); ++s)
        for (const auto& m : stages[s].members)
            out.members.push_back({"stage" + std::to_string(s) + "." + m.name, m.eval});
    return out;
}

/// Coordinate functionals e_1..e_d on Q^(d).
SeparatingFamily<FormalReal> rational_power_family(std::size_t d);

/// Torsion projection to Q/Z plus coordinate functionals on the free part
/// for symbols 1..free_rank.
SeparatingFamily<CircleElement> circle_family(std::size_t free_rank);

/// Member n (for n = 0..max_level) is reduction modulo L_n; its stage index
/// for a non-identity matrix is the first witness, congruence_level(U).
SeparatingFamily<UniMatrix> congruence_tower(std::size_t m, unsigned long max_level);

/// Prüfer components of q ∈ Q/Z: prime p ↦ component with p-power
/// denominator; components sum to q mod 1. Throws PreconditionError unless
/// 0 ≤ q < 1.
std::map<Integer, Rational> torsion_primary_decompose(const Rational& q);

// ---------------------------------------------------------------- finite groups and actions

using Permutation = std::vector<std::size_t>;

/// Finite group given by its multiplication table; axioms are validated on
/// construction.
class FiniteGroupTable {
public:
    FiniteGroupTable(std::vector<std::string> names, std::vector<std::vector<std::size_t>> table);

    /// Closure of permutations of {0..n-1} under (p q)(x) = p(q(x)),
    /// elements in breadth-first order from the identity.
    static FiniteGroupTable from_permutations(const std::vector<Permutation>& generators, std::size_t degree);
    static FiniteGroupTable cyclic(std::size_t n);
    /// Dihedral group of order 2n.
    static FiniteGroupTable dihedral(std::size_t n);
    static FiniteGroupTable symmetric(std::size_t n);
    static FiniteGroupTable direct_product(const FiniteGroupTable& g, const FiniteGroupTable& h);

    std::size_t order() const { return table_.size(); }
    std::size_t identity() const { return identity_; }
    std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a][b]; }
    std::size_t inverse(std::size_t a) const { return inverses_[a]; }
    const std::string& name(std::size_t a) const { return names_[a]; }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<std::vector<std::size_t>>& table() const { return table_; }

    /// Subgroup generated by the given elements, sorted.
    std::vector<std::size_t> generated_subgroup(const std::vector<std::size_t>& generators) const;
    bool is_subgroup(const std::vector<std::size_t>& elements) const;

private:
    std::vector<std::string> names_;
    std::vector<std::vector<std::size_t>> table_;
    std::vector<std::size_t> inverses_;
    std::size_t identity_ = 0;
};

/// Left action of a finite group on points {0..points-1}:
/// table[g][x] = g·x. Validated on construction.
class FiniteAction {
public:
    FiniteAction(FiniteGroupTable group, std::size_t points, std::vector<std::vector<std::size_t>> table);

    const FiniteGroupTable& group() const { return group_; }
    std::size_t points() const { return points_; }
    std::size_t act(std::size_t g, std::size_t x) const { return table_[g][x]; }
    const std::vector<std::vector<std::size_t>>& table() const { return table_; }

    /// Elements acting trivially, sorted.
    std::vector<std::size_t> kernel() const;
    bool is_faithful() const { return kernel().size() == 1; }

private:
    FiniteGroupTable group_;
    std::size_t points_;
    std::vector<std::vector<std::size_t>> table_;
};

/// Action of a subgroup G0 < G on X, with G0 listed by element indices of G
/// and table[k][x] = subgroup[k]·x.
struct SubgroupAction {
    std::vector<std::size_t> subgroup;
    std::size_t points = 0;
    std::vector<std::vector<std::size_t>> table;
};

/// G acting on Y = (G × X)/G0, where (g h, x) ~ (g, h x) for h ∈ G0.
struct InducedAction {
    FiniteAction action;
    /// Left coset representatives in first-occurrence order.
    std::vector<std::size_t> transversal;
    /// Point y ↦ (transversal position, x).
    std::vector<std::pair<std::size_t, std::size_t>> classes;
};

/// Throws PreconditionError when `act.subgroup` is not a subgroup of G or
/// the table is not a G0-action.
InducedAction induced_action(const FiniteGroupTable& group, const SubgroupAction& act);

} // namespace ctrep
