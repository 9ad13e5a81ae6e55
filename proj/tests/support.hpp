#pragma once

// Random generators and brute-force oracles shared by the unit, property and
// acceptance tests. The oracles deliberately avoid the library's own
// algorithms: value sets by box enumeration, matrix products through dense
// (diagonal-included) arithmetic, pigeonhole triples by exhaustive search.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "ctrep/extensions.hpp"
#include "ctrep/puiseux.hpp"
#include "ctrep/representability.hpp"
#include "ctrep/unitriangular.hpp"

namespace testsupport {

using ctrep::Integer;
using ctrep::PuiseuxPoly;
using ctrep::Rational;
using ctrep::UniMatrix;

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rational random_rational(Rng& rng, long bound, bool nonzero = false) {
    for (;;) {
        const Rational r(Integer(uniform(rng, -bound, bound)), Integer(uniform(rng, 1, bound)));
        if (!nonzero || !r.is_zero()) return r;
    }
}

inline Rational random_exponent(Rng& rng, long ramification, long lo, long hi) {
    const long q = uniform(rng, 1, ramification);
    return Rational(Integer(uniform(rng, lo * q, hi * q)), Integer(q));
}

/// Up to `terms` monomials with exponents in [lo, hi] of denominator ≤ ramification.
inline PuiseuxPoly random_series(Rng& rng, int terms, long ramification, long coeff_bound, long lo, long hi) {
    PuiseuxPoly x;
    const int n = static_cast<int>(uniform(rng, 0, terms));
    for (int k = 0; k < n; ++k)
        x += PuiseuxPoly::monomial(random_rational(rng, coeff_bound, true), random_exponent(rng, ramification, lo, hi));
    return x;
}

inline PuiseuxPoly random_nonzero_series(Rng& rng, int terms, long ramification, long coeff_bound, long lo,
                                         long hi) {
    for (;;) {
        PuiseuxPoly x = random_series(rng, terms, ramification, coeff_bound, lo, hi);
        if (!x.is_zero()) return x;
    }
}

/// Exponent → coefficient, independent of the library's ramified storage.
using Dense = std::map<Rational, Rational>;

inline Dense dense(const PuiseuxPoly& x) {
    Dense out;
    for (const auto& [e, c] : x.exponent_terms()) out[e] = c;
    return out;
}

inline void add_scaled(Dense& acc, const Dense& x, const Integer& k) {
    if (k == 0) return;
    for (const auto& [e, c] : x) {
        Rational& slot = acc[e];
        slot += c * Rational(k);
        if (slot.is_zero()) acc.erase(e);
    }
}

inline std::optional<Rational> dense_valuation(const Dense& x) {
    if (x.empty()) return std::nullopt;
    return x.begin()->first;
}

/// Finite valuations of Σ p_i x_i over the box |p_i| ≤ bound (p ≠ 0 included or not).
inline std::set<Rational> brute_force_values(const std::vector<PuiseuxPoly>& gens, long bound,
                                             bool* zero_found = nullptr) {
    std::vector<Dense> xs;
    for (const auto& g : gens) xs.push_back(dense(g));
    std::set<Rational> values;
    std::vector<long> p(gens.size(), -bound);
    if (zero_found) *zero_found = false;
    for (;;) {
        Dense acc;
        bool all_zero = true;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            add_scaled(acc, xs[i], Integer(p[i]));
            all_zero = all_zero && p[i] == 0;
        }
        if (auto v = dense_valuation(acc)) values.insert(*v);
        else if (!all_zero && zero_found) *zero_found = true;
        std::size_t k = 0;
        while (k < p.size() && p[k] == bound) p[k++] = -bound;
        if (k == p.size()) break;
        ++p[k];
    }
    return values;
}

// ---------------------------------------------------------------- dense matrices

using DenseMatrix = std::vector<std::vector<PuiseuxPoly>>;

inline DenseMatrix to_dense(const UniMatrix& u) {
    const std::size_t m = u.size();
    DenseMatrix out(m, std::vector<PuiseuxPoly>(m));
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) out[p][q] = u.entry(p + 1, q + 1);
    return out;
}

inline DenseMatrix dense_multiply(const DenseMatrix& a, const DenseMatrix& b) {
    const std::size_t m = a.size();
    DenseMatrix out(m, std::vector<PuiseuxPoly>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) out[i][j] += a[i][k] * b[k][j];
    return out;
}

inline bool dense_is_identity(const DenseMatrix& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a[i][j] != PuiseuxPoly(i == j ? 1 : 0)) return false;
    return true;
}

/// Entries above the diagonal, each a random series in V.
inline UniMatrix random_unitriangular(Rng& rng, std::size_t m, int terms, long ramification, long hi,
                                      double density = 0.7) {
    UniMatrix u(m);
    std::bernoulli_distribution keep(density);
    for (std::size_t p = 1; p <= m; ++p)
        for (std::size_t q = p + 1; q <= m; ++q)
            if (keep(rng)) u.set(p, q, random_series(rng, terms, ramification, 20, 0, hi));
    return u;
}

/// Brute-force minimal valuation of the entries of U − I (nullopt = identity).
inline std::optional<Rational> min_entry_valuation(const UniMatrix& u) {
    std::optional<Rational> best;
    for (std::size_t p = 1; p <= u.size(); ++p)
        for (std::size_t q = p + 1; q <= u.size(); ++q) {
            const Dense d = dense(u.upper(p, q));
            if (auto v = dense_valuation(d); v && (!best || *v < *best)) best = v;
        }
    return best;
}

// ---------------------------------------------------------------- pigeonhole

struct Triple {
    std::size_t i, j, k;  // 0-based positions
    friend bool operator==(const Triple&, const Triple&) = default;
};

/// Lexicographically least distinct triple with a_i = a_j and b_i = b_k.
inline std::optional<Triple> exhaustive_pigeonhole(const ctrep::LabelTable& table) {
    const auto& rows = table.rows;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j)
            for (std::size_t k = 0; k < rows.size(); ++k) {
                if (i == j || j == k || i == k) continue;
                if (rows[i].a_label == rows[j].a_label && rows[i].b_label == rows[k].b_label)
                    return Triple{i, j, k};
            }
    return std::nullopt;
}

inline ctrep::LabelTable random_label_table(Rng& rng, std::size_t n, long labels) {
    ctrep::LabelTable t;
    for (std::size_t r = 0; r < n; ++r)
        t.rows.push_back({r + 1, "x" + std::to_string(uniform(rng, 1, labels)),
                          "u" + std::to_string(uniform(rng, 1, labels))});
    return t;
}

// ---------------------------------------------------------------- extensions

inline ctrep::SparseAbelian random_abelian(Rng& rng, ctrep::DomainTag tag, ctrep::GeneratorId max_index,
                                           int terms) {
    ctrep::SparseAbelian x(tag);
    const long bound = tag == ctrep::DomainTag::rational ? 9 : 6;
    for (int k = 0; k < terms; ++k) {
        const auto i = static_cast<ctrep::GeneratorId>(uniform(rng, 1, static_cast<long>(max_index)));
        Rational c = tag == ctrep::DomainTag::rational ? random_rational(rng, bound)
                                                        : Rational(uniform(rng, -bound, bound));
        x += uniform(rng, 0, 1) ? ctrep::SparseAbelian::a(tag, i, c) : ctrep::SparseAbelian::b(tag, i, c);
    }
    return x;
}

/// Σ_i α_i(x) β_i(y) from explicit coordinate loops.
inline Rational naive_cocycle(const ctrep::SparseAbelian& x, const ctrep::SparseAbelian& y,
                              ctrep::GeneratorId max_index) {
    Rational s;
    for (ctrep::GeneratorId i = 1; i <= max_index; ++i) s += x.alpha(i) * y.beta(i);
    return s;
}

// ---------------------------------------------------------------- finite actions

inline bool satisfies_action_axioms(const ctrep::FiniteGroupTable& g,
                                    const std::vector<std::vector<std::size_t>>& table, std::size_t points) {
    if (table.size() != g.order()) return false;
    for (std::size_t x = 0; x < points; ++x)
        if (table[g.identity()][x] != x) return false;
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = 0; b < g.order(); ++b)
            for (std::size_t x = 0; x < points; ++x)
                if (table[g.multiply(a, b)][x] != table[a][table[b][x]]) return false;
    return true;
}

inline std::vector<std::size_t> brute_kernel(const std::vector<std::vector<std::size_t>>& table,
                                             std::size_t points) {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < table.size(); ++a) {
        bool trivial = true;
        for (std::size_t x = 0; x < points && trivial; ++x) trivial = table[a][x] == x;
        if (trivial) out.push_back(a);
    }
    return out;
}

inline bool is_prime_power(Integer n) {
    if (n < 2) return false;
    for (Integer p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            return n == 1;
        }
    return true;
}

} // namespace testsupport
