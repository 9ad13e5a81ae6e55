#include "ctrep/unitriangular.hpp"

#include <string>

#include "ctrep/errors.hpp"
#include "ctrep/valuation_lemma.hpp"

namespace ctrep {

namespace {

void require_same_size(const UniMatrix& a, const UniMatrix& b) {
    if (a.size() != b.size())
        throw DomainError("matrix size mismatch: " + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()));
}

void require_in_valuation_ring(const UniMatrix& u) {
    for (std::size_t p = 1; p <= u.size(); ++p)
        for (std::size_t q = p + 1; q <= u.size(); ++q)
            if (u.upper(p, q).valuation() < ExtValuation(Rational(0)))
                throw PreconditionError("entry (" + std::to_string(p) + "," + std::to_string(q) +
                                        ") has negative valuation");
}

} // namespace

UniMatrix::UniMatrix(std::size_t m) : size_(m), upper_(m * m) {
    if (m < 2) throw DomainError("unitriangular matrices need size at least 2");
}

UniMatrix UniMatrix::elementary(std::size_t m, std::size_t p, std::size_t q, PuiseuxPoly value) {
    UniMatrix out(m);
    out.set(p, q, std::move(value));
    return out;
}

std::size_t UniMatrix::slot(std::size_t p, std::size_t q) const {
    if (p < 1 || q > size_ || p >= q)
        throw DomainError("(" + std::to_string(p) + "," + std::to_string(q) +
                          ") is not a strictly upper entry of a size-" + std::to_string(size_) +
                          " matrix");
    return (p - 1) * size_ + (q - 1);
}

PuiseuxPoly UniMatrix::entry(std::size_t p, std::size_t q) const {
    if (p < 1 || q < 1 || p > size_ || q > size_) throw DomainError("matrix index out of range");
    if (p == q) return PuiseuxPoly(1);
    if (p > q) return PuiseuxPoly();
    return upper_[slot(p, q)];
}

const PuiseuxPoly& UniMatrix::upper(std::size_t p, std::size_t q) const { return upper_[slot(p, q)]; }

void UniMatrix::set(std::size_t p, std::size_t q, PuiseuxPoly value) {
    upper_[slot(p, q)] = std::move(value);
}

bool UniMatrix::is_identity() const {
    for (const auto& x : upper_)
        if (!x.is_zero()) return false;
    return true;
}

UniMatrix operator*(const UniMatrix& a, const UniMatrix& b) {
    require_same_size(a, b);
    const std::size_t m = a.size();
    UniMatrix out(m);
    for (std::size_t p = 1; p <= m; ++p) {
        for (std::size_t q = p + 1; q <= m; ++q) {
            PuiseuxPoly sum = a.upper(p, q) + b.upper(p, q);
            for (std::size_t r = p + 1; r < q; ++r) {
                const auto& x = a.upper(p, r);
                const auto& y = b.upper(r, q);
                if (!x.is_zero() && !y.is_zero()) sum += x * y;
            }
            out.set(p, q, std::move(sum));
        }
    }
    return out;
}

UniMatrix inverse(const UniMatrix& a) {
    const std::size_t m = a.size();
    UniMatrix out(m);
    // Solve A X = I column by column, bottom row first.
    for (std::size_t q = 2; q <= m; ++q) {
        for (std::size_t p = q - 1; p >= 1; --p) {
            PuiseuxPoly sum = a.upper(p, q);
            for (std::size_t r = p + 1; r < q; ++r) {
                const auto& x = a.upper(p, r);
                const auto& y = out.upper(r, q);
                if (!x.is_zero() && !y.is_zero()) sum += x * y;
            }
            out.set(p, q, -sum);
        }
    }
    return out;
}

UniMatrix commutator(const UniMatrix& a, const UniMatrix& b) {
    require_same_size(a, b);
    return inverse(a) * inverse(b) * a * b;
}

UniMatrix power(const UniMatrix& a, long k) {
    UniMatrix base = k < 0 ? inverse(a) : a;
    unsigned long e = k < 0 ? 0UL - static_cast<unsigned long>(k) : static_cast<unsigned long>(k);
    UniMatrix out(a.size());
    while (e != 0) {
        if (e & 1UL) out = out * base;
        e >>= 1;
        if (e != 0) base = base * base;
    }
    return out;
}

UniMatrix uni_group_ops(const UniMatrix& u, const UniMatrix& v, GroupOp op) {
    switch (op) {
    case GroupOp::multiply: return u * v;
    case GroupOp::invert: return inverse(u);
    case GroupOp::commutator: return commutator(u, v);
    }
    throw DomainError("unknown group operation");
}

std::optional<std::size_t> lcs_depth(const UniMatrix& u) {
    const std::size_t m = u.size();
    for (std::size_t offset = 1; offset < m; ++offset)
        for (std::size_t p = 1; p + offset <= m; ++p)
            if (!u.upper(p, p + offset).is_zero()) return offset - 1;
    return std::nullopt;
}

PuiseuxPoly epsilon_entry(const UniMatrix& u, std::size_t p, std::size_t i) {
    if (p < 1 || p + i + 1 > u.size())
        throw DomainError("epsilon index (" + std::to_string(p) + ", depth " + std::to_string(i) +
                          ") out of range");
    const auto depth = lcs_depth(u);
    if (depth && *depth < i)
        throw PreconditionError("matrix has depth " + std::to_string(*depth) + " < " + std::to_string(i));
    return u.upper(p, p + i + 1);
}

bool congruence_membership(const UniMatrix& u, unsigned long n) {
    require_in_valuation_ring(u);
    const ExtValuation threshold{Rational(Integer(n))};
    for (std::size_t p = 1; p <= u.size(); ++p)
        for (std::size_t q = p + 1; q <= u.size(); ++q)
            if (u.upper(p, q).valuation() <= threshold) return false;
    return true;
}

std::optional<unsigned long> congruence_level(const UniMatrix& u) {
    require_in_valuation_ring(u);
    ExtValuation lowest = ExtValuation::infinity();
    for (std::size_t p = 1; p <= u.size(); ++p)
        for (std::size_t q = p + 1; q <= u.size(); ++q) lowest = std::min(lowest, u.upper(p, q).valuation());
    if (lowest.is_infinite()) return std::nullopt;
    return lowest.value().ceil().get_ui();
}

UniMatrix reduce_matrix_mod(const UniMatrix& u, unsigned long n) {
    require_in_valuation_ring(u);
    UniMatrix out(u.size());
    for (std::size_t p = 1; p <= u.size(); ++p)
        for (std::size_t q = p + 1; q <= u.size(); ++q) out.set(p, q, reduce_mod_threshold(u.upper(p, q), n));
    return out;
}

SeparationCertificate central_coset_separator(const UniMatrix& zeta, const UniMatrix& gamma) {
    require_same_size(zeta, gamma);
    const auto depth = lcs_depth(zeta);
    if (!depth) throw PreconditionError("zeta is the identity");
    if (zeta * gamma != gamma * zeta) throw PreconditionError("zeta and gamma do not commute");
    require_in_valuation_ring(zeta);
    require_in_valuation_ring(gamma);
    const auto gamma_depth = lcs_depth(gamma);
    if (gamma_depth && *gamma_depth < *depth)
        throw PreconditionError("gamma leaves the lower-central-series term of zeta");

    SeparationCertificate cert;
    cert.depth = *depth;
    for (std::size_t p = 1; p + cert.depth + 1 <= zeta.size(); ++p) {
        if (!epsilon_entry(zeta, p, cert.depth).is_zero()) {
            cert.row = p;
            break;
        }
    }
    cert.offset = epsilon_entry(zeta, cert.row, cert.depth);
    cert.step = epsilon_entry(gamma, cert.row, cert.depth);

    CosetSpec spec{cert.offset, {}};
    if (!cert.step.is_zero()) spec.subgroup.generators.push_back(cert.step);
    try {
        cert.level = coset_separation_bound(spec).level;
    } catch (const CosetMembershipError&) {
        throw PreconditionError("epsilon(zeta) = " + cert.offset.str() + " lies in Z*" + cert.step.str() +
                                "; separation hypothesis fails");
    }
    return cert;
}

int hilbert_symbol_real(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) throw PreconditionError("Hilbert symbol of zero");
    return (a.sign() < 0 && b.sign() < 0) ? -1 : 1;
}

bool commuting_lift_obstruction(const Rational& x) { return hilbert_symbol_real(x, x) == -1; }

} // namespace ctrep
