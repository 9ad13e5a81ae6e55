#include "ctrep/representability.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "ctrep/errors.hpp"

namespace ctrep {

// ---------------------------------------------------------------- FormalReal

FormalReal::FormalReal(std::map<Symbol, Rational> coeffs) : coeffs_(std::move(coeffs)) {
    std::erase_if(coeffs_, [](const auto& kv) { return kv.second.is_zero(); });
}

FormalReal FormalReal::basis(Symbol s, const Rational& coeff) { return FormalReal({{s, coeff}}); }

Rational FormalReal::coordinate(Symbol s) const {
    const auto it = coeffs_.find(s);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

FormalReal FormalReal::operator-() const {
    FormalReal out = *this;
    for (auto& [s, c] : out.coeffs_) c = -c;
    return out;
}

FormalReal& FormalReal::operator+=(const FormalReal& rhs) {
    for (const auto& [s, c] : rhs.coeffs_) coeffs_[s] += c;
    std::erase_if(coeffs_, [](const auto& kv) { return kv.second.is_zero(); });
    return *this;
}

std::string FormalReal::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [s, c] : coeffs_) {
        const bool negative = c.sign() < 0;
        if (out.empty()) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        const Rational mag = c.abs();
        if (mag != Rational(1)) out += mag.is_integer() ? mag.str() : "(" + mag.str() + ")";
        out += "e" + std::to_string(s);
    }
    return out;
}

// ---------------------------------------------------------------- targets

bool is_trivial(const TargetValue& v) {
    return std::visit(
        [](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, ReducedMatrix>) return x.value.is_identity();
            else return x.is_zero();
        },
        v);
}

TargetValue combine(const TargetValue& a, const TargetValue& b) {
    if (a.index() != b.index()) throw DomainError("combining values of different targets");
    if (const auto* x = std::get_if<Rational>(&a)) return *x + std::get<Rational>(b);
    if (const auto* x = std::get_if<RationalModOne>(&a)) return *x + std::get<RationalModOne>(b);
    const auto& u = std::get<ReducedMatrix>(a);
    const auto& v = std::get<ReducedMatrix>(b);
    if (u.level != v.level) throw DomainError("combining reductions at different levels");
    return ReducedMatrix{reduce_matrix_mod(u.value * v.value, u.level), u.level};
}

std::string to_string(const TargetValue& v) {
    if (const auto* x = std::get_if<Rational>(&v)) return x->str();
    if (const auto* x = std::get_if<RationalModOne>(&v)) return x->value().str() + " mod 1";
    const auto& u = std::get<ReducedMatrix>(v);
    return u.value.is_identity() ? "I" : "non-identity mod L" + std::to_string(u.level);
}

// ---------------------------------------------------------------- families

SeparatingFamily<FormalReal> rational_power_family(std::size_t d) {
    SeparatingFamily<FormalReal> f;
    f.compose = [](const FormalReal& x, const FormalReal& y) { return x + y; };
    f.is_identity = [](const FormalReal& x) { return x.is_zero(); };
    for (std::size_t s = 1; s <= d; ++s) {
        const auto sym = static_cast<FormalReal::Symbol>(s);
        f.members.push_back({"coord" + std::to_string(s),
                             [sym](const FormalReal& x) -> TargetValue { return x.coordinate(sym); }});
    }
    return f;
}

SeparatingFamily<CircleElement> circle_family(std::size_t free_rank) {
    SeparatingFamily<CircleElement> f;
    f.compose = [](const CircleElement& x, const CircleElement& y) { return x + y; };
    f.is_identity = [](const CircleElement& x) { return x.torsion.is_zero() && x.free.is_zero(); };
    f.members.push_back({"torsion", [](const CircleElement& x) -> TargetValue { return x.torsion; }});
    for (std::size_t s = 1; s <= free_rank; ++s) {
        const auto sym = static_cast<FormalReal::Symbol>(s);
        f.members.push_back({"coord" + std::to_string(s),
                             [sym](const CircleElement& x) -> TargetValue { return x.free.coordinate(sym); }});
    }
    return f;
}

SeparatingFamily<UniMatrix> congruence_tower(std::size_t m, unsigned long max_level) {
    std::vector<SeparatingFamily<UniMatrix>> stages;
    for (unsigned long n = 0; n <= max_level; ++n) {
        SeparatingFamily<UniMatrix> stage;
        stage.compose = [](const UniMatrix& a, const UniMatrix& b) { return a * b; };
        stage.is_identity = [](const UniMatrix& a) { return a.is_identity(); };
        stage.members.push_back({"mod L" + std::to_string(n), [n, m](const UniMatrix& u) -> TargetValue {
                                     if (u.size() != m) throw DomainError("matrix size mismatch in tower");
                                     return ReducedMatrix{reduce_matrix_mod(u, n), n};
                                 }});
        stages.push_back(std::move(stage));
    }
    return tower_family(stages);
}

std::map<Integer, Rational> torsion_primary_decompose(const Rational& q) {
    if (q.sign() < 0 || q >= Rational(1)) throw PreconditionError("torsion element must lie in [0, 1)");
    const Integer a = q.numerator();
    const Integer b = q.denominator();
    // Trial division; denominators are desk-scale.
    std::vector<std::pair<Integer, Integer>> prime_powers;
    Integer rest = b;
    for (Integer p = 2; p * p <= rest; ++p) {
        if (!mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) continue;
        Integer pe = 1;
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
            rest /= p;
            pe *= p;
        }
        prime_powers.emplace_back(p, pe);
    }
    if (rest > 1) prime_powers.emplace_back(rest, rest);

    // Component for p^e is x/p^e with x = a (b/p^e)^{-1} mod p^e.
    std::map<Integer, Rational> out;
    for (const auto& [p, pe] : prime_powers) {
        const Integer cofactor = b / pe;
        Integer inv;
        mpz_invert(inv.get_mpz_t(), cofactor.get_mpz_t(), pe.get_mpz_t());
        Integer x = a * inv;
        mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), pe.get_mpz_t());
        out.emplace(p, Rational(x, pe));
    }
    return out;
}

// ---------------------------------------------------------------- finite groups

FiniteGroupTable::FiniteGroupTable(std::vector<std::string> names, std::vector<std::vector<std::size_t>> table)
    : names_(std::move(names)), table_(std::move(table)) {
    const std::size_t n = table_.size();
    if (n == 0) throw PreconditionError("empty group table");
    if (names_.empty()) {
        for (std::size_t i = 0; i < n; ++i) names_.push_back("g" + std::to_string(i));
    }
    if (names_.size() != n) throw PreconditionError("group table and element list differ in size");
    for (const auto& row : table_) {
        if (row.size() != n) throw PreconditionError("group table is not square");
        for (std::size_t x : row)
            if (x >= n) throw PreconditionError("group table entry out of range");
    }
    bool found = false;
    for (std::size_t e = 0; e < n && !found; ++e) {
        bool neutral = true;
        for (std::size_t a = 0; a < n && neutral; ++a) neutral = table_[e][a] == a && table_[a][e] == a;
        if (neutral) {
            identity_ = e;
            found = true;
        }
    }
    if (!found) throw PreconditionError("group table has no identity");
    inverses_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (table_[a][b] == identity_ && table_[b][a] == identity_) inverses_[a] = b;
    for (std::size_t a = 0; a < n; ++a)
        if (inverses_[a] == n) throw PreconditionError("element " + names_[a] + " has no inverse");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw PreconditionError("group table is not associative");
}

FiniteGroupTable FiniteGroupTable::from_permutations(const std::vector<Permutation>& generators,
                                                     std::size_t degree) {
    Permutation id(degree);
    std::iota(id.begin(), id.end(), 0);
    for (const auto& g : generators) {
        if (g.size() != degree) throw PreconditionError("permutation degree mismatch");
        std::vector<bool> hit(degree, false);
        for (std::size_t x : g) {
            if (x >= degree || hit[x]) throw PreconditionError("not a permutation");
            hit[x] = true;
        }
    }
    auto compose = [degree](const Permutation& p, const Permutation& q) {
        Permutation r(degree);
        for (std::size_t x = 0; x < degree; ++x) r[x] = p[q[x]];
        return r;
    };
    std::vector<Permutation> elements{id};
    std::map<Permutation, std::size_t> index{{id, 0}};
    for (std::size_t k = 0; k < elements.size(); ++k) {
        for (const auto& g : generators) {
            Permutation next = compose(g, elements[k]);
            if (index.emplace(next, elements.size()).second) elements.push_back(std::move(next));
        }
    }
    const std::size_t n = elements.size();
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    std::vector<std::string> names;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) table[a][b] = index.at(compose(elements[a], elements[b]));
        std::string name = "[";
        for (std::size_t x = 0; x < degree; ++x) name += (x ? " " : "") + std::to_string(elements[a][x]);
        names.push_back(name + "]");
    }
    return FiniteGroupTable(std::move(names), std::move(table));
}

FiniteGroupTable FiniteGroupTable::cyclic(std::size_t n) {
    if (n == 0) throw PreconditionError("cyclic group of order 0");
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    std::vector<std::string> names;
    for (std::size_t a = 0; a < n; ++a) {
        names.push_back(std::to_string(a));
        for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    }
    return FiniteGroupTable(std::move(names), std::move(table));
}

FiniteGroupTable FiniteGroupTable::dihedral(std::size_t n) {
    if (n < 3) throw PreconditionError("dihedral group needs n >= 3");
    Permutation rotation(n), reflection(n);
    for (std::size_t x = 0; x < n; ++x) {
        rotation[x] = (x + 1) % n;
        reflection[x] = (n - x) % n;
    }
    return from_permutations({rotation, reflection}, n);
}

FiniteGroupTable FiniteGroupTable::symmetric(std::size_t n) {
    if (n == 0) throw PreconditionError("symmetric group of degree 0");
    if (n == 1) return from_permutations({}, 1);
    Permutation transposition(n), cycle(n);
    std::iota(transposition.begin(), transposition.end(), 0);
    std::swap(transposition[0], transposition[1]);
    for (std::size_t x = 0; x < n; ++x) cycle[x] = (x + 1) % n;
    return from_permutations({transposition, cycle}, n);
}

FiniteGroupTable FiniteGroupTable::direct_product(const FiniteGroupTable& g, const FiniteGroupTable& h) {
    const std::size_t n = g.order() * h.order();
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    std::vector<std::string> names;
    for (std::size_t a = 0; a < n; ++a) {
        names.push_back("(" + g.name(a / h.order()) + "," + h.name(a % h.order()) + ")");
        for (std::size_t b = 0; b < n; ++b)
            table[a][b] = g.multiply(a / h.order(), b / h.order()) * h.order() +
                          h.multiply(a % h.order(), b % h.order());
    }
    return FiniteGroupTable(std::move(names), std::move(table));
}

std::vector<std::size_t> FiniteGroupTable::generated_subgroup(const std::vector<std::size_t>& generators) const {
    std::set<std::size_t> seen{identity_};
    std::deque<std::size_t> queue{identity_};
    while (!queue.empty()) {
        const std::size_t x = queue.front();
        queue.pop_front();
        for (std::size_t g : generators) {
            if (g >= order()) throw PreconditionError("element index out of range");
            const std::size_t y = multiply(g, x);
            if (seen.insert(y).second) queue.push_back(y);
        }
    }
    return {seen.begin(), seen.end()};
}

bool FiniteGroupTable::is_subgroup(const std::vector<std::size_t>& elements) const {
    std::set<std::size_t> s(elements.begin(), elements.end());
    if (s.empty() || !s.contains(identity_)) return false;
    for (std::size_t a : s) {
        if (a >= order()) return false;
        for (std::size_t b : s)
            if (!s.contains(multiply(a, b))) return false;
    }
    return true;
}

// ---------------------------------------------------------------- actions

FiniteAction::FiniteAction(FiniteGroupTable group, std::size_t points, std::vector<std::vector<std::size_t>> table)
    : group_(std::move(group)), points_(points), table_(std::move(table)) {
    const std::size_t n = group_.order();
    if (table_.size() != n) throw PreconditionError("action table needs one row per group element");
    for (const auto& row : table_) {
        if (row.size() != points_) throw PreconditionError("action row has the wrong length");
        for (std::size_t y : row)
            if (y >= points_) throw PreconditionError("action table entry out of range");
    }
    for (std::size_t x = 0; x < points_; ++x)
        if (table_[group_.identity()][x] != x) throw PreconditionError("identity does not act trivially");
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h)
            for (std::size_t x = 0; x < points_; ++x)
                if (table_[group_.multiply(g, h)][x] != table_[g][table_[h][x]])
                    throw PreconditionError("action is not compatible with multiplication");
}

std::vector<std::size_t> FiniteAction::kernel() const {
    std::vector<std::size_t> out;
    for (std::size_t g = 0; g < group_.order(); ++g) {
        bool trivial = true;
        for (std::size_t x = 0; x < points_ && trivial; ++x) trivial = table_[g][x] == x;
        if (trivial) out.push_back(g);
    }
    return out;
}

InducedAction induced_action(const FiniteGroupTable& group, const SubgroupAction& act) {
    if (!group.is_subgroup(act.subgroup)) throw PreconditionError("G0 is not a subgroup of G");
    const std::size_t n = group.order();
    std::vector<std::size_t> position(n, n);  // element of G0 ↦ row of act.table
    for (std::size_t k = 0; k < act.subgroup.size(); ++k) {
        if (position[act.subgroup[k]] != n) throw PreconditionError("G0 lists an element twice");
        position[act.subgroup[k]] = k;
    }
    if (act.table.size() != act.subgroup.size()) throw PreconditionError("G0 action needs one row per element");
    for (const auto& row : act.table) {
        if (row.size() != act.points) throw PreconditionError("G0 action row has the wrong length");
        for (std::size_t y : row)
            if (y >= act.points) throw PreconditionError("G0 action entry out of range");
    }
    auto sub_act = [&](std::size_t h, std::size_t x) { return act.table[position[h]][x]; };
    for (std::size_t x = 0; x < act.points; ++x)
        if (sub_act(group.identity(), x) != x) throw PreconditionError("identity of G0 does not act trivially");
    for (std::size_t g : act.subgroup)
        for (std::size_t h : act.subgroup)
            for (std::size_t x = 0; x < act.points; ++x)
                if (sub_act(group.multiply(g, h), x) != sub_act(g, sub_act(h, x)))
                    throw PreconditionError("G0 table is not an action");

    // Left cosets g G0, representatives by first occurrence.
    std::vector<std::size_t> transversal;
    std::vector<std::size_t> coset_of(n, n);
    for (std::size_t g = 0; g < n; ++g) {
        if (coset_of[g] != n) continue;
        const std::size_t c = transversal.size();
        transversal.push_back(g);
        for (std::size_t h : act.subgroup) coset_of[group.multiply(g, h)] = c;
    }
    std::vector<std::pair<std::size_t, std::size_t>> classes;
    for (std::size_t c = 0; c < transversal.size(); ++c)
        for (std::size_t x = 0; x < act.points; ++x) classes.emplace_back(c, x);

    // (g, x) ~ (r, h x) where g = r h with r the representative of g G0.
    auto canonical = [&](std::size_t g, std::size_t x) {
        const std::size_t c = coset_of[g];
        const std::size_t h = group.multiply(group.inverse(transversal[c]), g);
        return c * act.points + sub_act(h, x);
    };
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(classes.size()));
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t y = 0; y < classes.size(); ++y) {
            const auto [c, x] = classes[y];
            table[s][y] = canonical(group.multiply(s, transversal[c]), x);
        }
    return InducedAction{FiniteAction(group, classes.size(), std::move(table)), std::move(transversal),
                         std::move(classes)};
}

} // namespace ctrep
