#include "ctrep/lattice.hpp"

#include <algorithm>
#include <utility>

#include "ctrep/errors.hpp"

namespace ctrep {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

void axpy(IntVector& target, const Integer& factor, const IntVector& source) {
    if (factor == 0) return;
    for (std::size_t c = 0; c < target.size(); ++c) target[c] -= factor * source[c];
}

} // namespace

IntMatrix hermite_rows(IntMatrix rows) {
    if (rows.empty()) return rows;
    const std::size_t cols = rows.front().size();
    for (const auto& r : rows)
        if (r.size() != cols) throw DomainError("ragged integer matrix");

    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
        // Euclid on the column below pivot_row until a single non-zero remains.
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t r = pivot_row; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                if (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col])) best = r;
            }
            if (best == rows.size()) break;
            std::swap(rows[pivot_row], rows[best]);
            bool done = true;
            for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                axpy(rows[r], floor_div(rows[r][col], rows[pivot_row][col]), rows[pivot_row]);
                if (rows[r][col] != 0) done = false;
            }
            if (done) break;
        }
        if (rows[pivot_row][col] == 0) continue;
        if (rows[pivot_row][col] < 0)
            for (auto& x : rows[pivot_row]) x = -x;
        for (std::size_t r = 0; r < pivot_row; ++r)
            axpy(rows[r], floor_div(rows[r][col], rows[pivot_row][col]), rows[pivot_row]);
        ++pivot_row;
    }
    rows.resize(pivot_row);
    return rows;
}

Integer common_denominator(const RatVector& values) {
    Integer l = 1;
    for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.denominator().get_mpz_t());
    return l;
}

namespace {

/// Gauss-Jordan on an augmented matrix; returns pivot columns.
std::vector<std::size_t> row_reduce(std::vector<RatVector>& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col].is_zero()) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        const Rational inv = Rational(1) / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            const Rational f = m[r][col];
            for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

RationalSolution solve_rational(const std::vector<RatVector>& columns, const RatVector& rhs) {
    const std::size_t n = columns.size();
    std::vector<RatVector> m(rhs.size(), RatVector(n + 1));
    for (std::size_t r = 0; r < rhs.size(); ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            if (columns[c].size() != rhs.size()) throw DomainError("column length mismatch");
            m[r][c] = columns[c][r];
        }
        m[r][n] = rhs[r];
    }
    const auto pivots = row_reduce(m, n + 1);
    RationalSolution out;
    if (!pivots.empty() && pivots.back() == n) return out;
    out.consistent = true;
    out.unique = pivots.size() == n;
    out.coefficients.assign(n, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) out.coefficients[pivots[i]] = m[i][n];
    return out;
}

std::size_t rational_rank(const std::vector<RatVector>& rows) {
    if (rows.empty()) return 0;
    auto m = rows;
    return row_reduce(m, m.front().size()).size();
}

} // namespace ctrep
