#include "ctrep/extensions.hpp"

#include <algorithm>
#include <set>

#include "ctrep/errors.hpp"

namespace ctrep {

std::string to_string(DomainTag tag) {
    switch (tag) {
    case DomainTag::free_int: return "free-int";
    case DomainTag::mod_two: return "mod-two";
    case DomainTag::rational: return "rational";
    }
    return "unknown";
}

DomainTag parse_domain_tag(std::string_view text) {
    std::string s(text);
    std::replace(s.begin(), s.end(), '_', '-');
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::tolower(ch); });
    if (s == "free-int") return DomainTag::free_int;
    if (s == "mod-two") return DomainTag::mod_two;
    if (s == "rational") return DomainTag::rational;
    throw ParseError("unknown domain tag '" + std::string(text) + "'");
}

namespace {

void require_same_tag(DomainTag a, DomainTag b) {
    if (a != b) throw DomainError("domain tag mismatch: " + to_string(a) + " vs " + to_string(b));
}

Rational reduce_mod(const Rational& value, const Integer& modulus) {
    if (modulus == 0) return value;
    if (!value.is_integer()) throw DomainError("non-integer value " + value.str() + " in a modular center");
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), value.numerator().get_mpz_t(), modulus.get_mpz_t());
    return Rational(r);
}

Rational lookup(const SparseAbelian::CoeffMap& m, GeneratorId i) {
    const auto it = m.find(i);
    return it == m.end() ? Rational(0) : it->second;
}

void add_into(SparseAbelian::CoeffMap& target, const SparseAbelian::CoeffMap& source) {
    for (const auto& [i, c] : source) target[i] += c;
}

} // namespace

// ---------------------------------------------------------------- SparseAbelian

SparseAbelian::SparseAbelian(DomainTag tag, CoeffMap a, CoeffMap b)
    : tag_(tag), a_(std::move(a)), b_(std::move(b)) {
    normalize();
}

SparseAbelian SparseAbelian::a(DomainTag tag, GeneratorId i, const Rational& coeff) {
    return SparseAbelian(tag, {{i, coeff}}, {});
}

SparseAbelian SparseAbelian::b(DomainTag tag, GeneratorId i, const Rational& coeff) {
    return SparseAbelian(tag, {}, {{i, coeff}});
}

void SparseAbelian::normalize() {
    for (CoeffMap* m : {&a_, &b_}) {
        for (auto& [i, c] : *m) {
            if (tag_ == DomainTag::rational) continue;
            if (!c.is_integer())
                throw DomainError("coefficient " + c.str() + " is not admissible for " + to_string(tag_));
            if (tag_ == DomainTag::mod_two) c = reduce_mod(c, 2);
        }
        std::erase_if(*m, [](const auto& kv) { return kv.second.is_zero(); });
    }
}

Rational SparseAbelian::alpha(GeneratorId i) const { return lookup(a_, i); }
Rational SparseAbelian::beta(GeneratorId i) const { return lookup(b_, i); }

SparseAbelian SparseAbelian::operator-() const { return scaled(Rational(-1)); }

SparseAbelian& SparseAbelian::operator+=(const SparseAbelian& rhs) {
    require_same_tag(tag_, rhs.tag_);
    add_into(a_, rhs.a_);
    add_into(b_, rhs.b_);
    normalize();
    return *this;
}

SparseAbelian SparseAbelian::scaled(const Rational& k) const {
    if (tag_ != DomainTag::rational && !k.is_integer())
        throw DomainError("scalar " + k.str() + " is not admissible for " + to_string(tag_));
    SparseAbelian out = *this;
    for (CoeffMap* m : {&out.a_, &out.b_})
        for (auto& [i, c] : *m) c *= k;
    out.normalize();
    return out;
}

std::string SparseAbelian::str() const {
    std::string out;
    auto emit = [&out](const Rational& c, char letter, GeneratorId i) {
        const bool negative = c.sign() < 0;
        if (out.empty()) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        const Rational mag = c.abs();
        if (mag != Rational(1)) out += mag.is_integer() ? mag.str() : "(" + mag.str() + ")";
        out += letter + std::to_string(i);
    };
    for (const auto& [i, c] : a_) emit(c, 'a', i);
    for (const auto& [i, c] : b_) emit(c, 'b', i);
    return out.empty() ? "0" : out;
}

CenterScalar cocycle_eval(const SparseAbelian& x, const SparseAbelian& y) {
    require_same_tag(x.tag(), y.tag());
    Rational sum;
    const auto& alphas = x.a_coeffs();
    const auto& betas = y.b_coeffs();
    // Both maps are ordered; walk the common support.
    auto ia = alphas.begin();
    auto ib = betas.begin();
    while (ia != alphas.end() && ib != betas.end()) {
        if (ia->first < ib->first) ++ia;
        else if (ib->first < ia->first) ++ib;
        else {
            sum += ia->second * ib->second;
            ++ia;
            ++ib;
        }
    }
    const Integer modulus = x.tag() == DomainTag::mod_two ? Integer(2) : Integer(0);
    return CenterScalar{reduce_mod(sum, modulus), modulus};
}

// ---------------------------------------------------------------- ExtElement

namespace {

Integer effective_modulus(DomainTag tag, const Integer& requested) {
    if (requested < 0) throw DomainError("negative modulus");
    switch (tag) {
    case DomainTag::mod_two:
        if (requested != 0 && requested != 2) throw DomainError("mod-two center has modulus 2");
        return 2;
    case DomainTag::rational:
        if (requested != 0) throw DomainError("rational center cannot be reduced");
        return 0;
    case DomainTag::free_int: return requested;
    }
    return requested;
}

} // namespace

ExtElement::ExtElement(DomainTag tag, Integer modulus) : shadow_(tag) {
    center_.modulus = effective_modulus(tag, modulus);
}

ExtElement::ExtElement(Rational center, SparseAbelian shadow, Integer modulus)
    : center_{std::move(center), effective_modulus(shadow.tag(), modulus)}, shadow_(std::move(shadow)) {
    reduce();
}

void ExtElement::reduce() {
    if (tag() != DomainTag::rational && !center_.value.is_integer())
        throw DomainError("center " + center_.value.str() + " is not admissible for " + to_string(tag()));
    center_.value = reduce_mod(center_.value, center_.modulus);
}

ExtElement ExtElement::central_generator(DomainTag tag, Integer modulus) {
    return ExtElement(Rational(1), SparseAbelian(tag), std::move(modulus));
}

ExtElement ExtElement::a(DomainTag tag, GeneratorId i) {
    return ExtElement(Rational(0), SparseAbelian::a(tag, i));
}

ExtElement ExtElement::b(DomainTag tag, GeneratorId i) {
    return ExtElement(Rational(0), SparseAbelian::b(tag, i));
}

std::string ExtElement::str() const { return "(" + center_.value.str() + ", " + shadow_.str() + ")"; }

namespace {

void require_compatible(const ExtElement& g, const ExtElement& h) {
    require_same_tag(g.tag(), h.tag());
    if (g.center().modulus != h.center().modulus)
        throw DomainError("elements live in different quotients (mod " + to_string(g.center().modulus) +
                          " vs mod " + to_string(h.center().modulus) + ")");
}

} // namespace

ExtElement operator*(const ExtElement& g, const ExtElement& h) {
    require_compatible(g, h);
    const Rational f = cocycle_eval(g.shadow(), h.shadow()).value;
    return ExtElement(g.center().value + h.center().value + f, g.shadow() + h.shadow(), g.center().modulus);
}

ExtElement inverse(const ExtElement& g) {
    const Rational f = cocycle_eval(g.shadow(), g.shadow()).value;
    return ExtElement(-g.center().value + f, -g.shadow(), g.center().modulus);
}

ExtElement commutator(const ExtElement& g, const ExtElement& h) {
    return inverse(g) * inverse(h) * g * h;
}

ExtElement power(const ExtElement& g, const Integer& k) {
    ExtElement base = k < 0 ? inverse(g) : g;
    Integer e = abs(k);
    ExtElement out(g.tag(), g.center().modulus);
    while (e != 0) {
        if (mpz_odd_p(e.get_mpz_t())) out = out * base;
        e >>= 1;
        if (e != 0) base = base * base;
    }
    return out;
}

ExtElement ext_group_ops(const ExtElement& g, const ExtElement& h, ExtOp op) {
    switch (op) {
    case ExtOp::multiply: return g * h;
    case ExtOp::invert: return inverse(g);
    case ExtOp::commutator: return commutator(g, h);
    }
    throw DomainError("unknown extension operation");
}

// ---------------------------------------------------------------- words

Word inverse(const Word& w) {
    Word out;
    out.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        Letter l = *it;
        l.exponent = -l.exponent;
        out.letters.push_back(l);
    }
    return out;
}

Word concat(const Word& u, const Word& v) {
    Word out = u;
    out.letters.insert(out.letters.end(), v.letters.begin(), v.letters.end());
    return out;
}

Word commutator_word(const Word& u, const Word& v) {
    return concat(concat(inverse(u), inverse(v)), concat(u, v));
}

Word letter_word(Letter::Kind kind, GeneratorId index, long exponent) {
    Word w;
    if (exponent != 0) w.letters.push_back(Letter{kind, kind == Letter::Kind::c ? 0 : index, exponent});
    return w;
}

std::string format_word(const Word& w) {
    if (w.letters.empty()) return "1";
    std::string out;
    for (const auto& l : w.letters) {
        if (!out.empty()) out += ' ';
        switch (l.kind) {
        case Letter::Kind::a: out += "a" + std::to_string(l.index); break;
        case Letter::Kind::b: out += "b" + std::to_string(l.index); break;
        case Letter::Kind::c: out += "c"; break;
        }
        if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
    }
    return out;
}

ExtElement eval_word(const Word& w, DomainTag tag, Integer modulus) {
    ExtElement out(tag, modulus);
    const Integer m = out.center().modulus;
    for (const auto& l : w.letters) {
        ExtElement gen(tag, m);
        switch (l.kind) {
        case Letter::Kind::a: gen = ExtElement(Rational(0), SparseAbelian::a(tag, l.index), m); break;
        case Letter::Kind::b: gen = ExtElement(Rational(0), SparseAbelian::b(tag, l.index), m); break;
        case Letter::Kind::c: gen = ExtElement::central_generator(tag, m); break;
        }
        out = out * power(gen, Integer(l.exponent));
    }
    return out;
}

// ---------------------------------------------------------------- relations

bool PresentationReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.passed; });
}

std::vector<RelationCheck> PresentationReport::failures() const {
    std::vector<RelationCheck> out;
    std::copy_if(checks.begin(), checks.end(), std::back_inserter(out),
                 [](const RelationCheck& c) { return !c.passed; });
    return out;
}

PresentationReport check_presentation(DomainTag tag,
                                      const std::vector<std::pair<GeneratorId, GeneratorId>>& samples,
                                      unsigned long order_bound) {
    PresentationReport report{tag, {}};
    const ExtElement c = ExtElement::central_generator(tag);
    auto a = [tag](GeneratorId i) { return ExtElement::a(tag, i); };
    auto b = [tag](GeneratorId i) { return ExtElement::b(tag, i); };
    auto record = [&report](std::string relation, bool passed) {
        report.checks.push_back({std::move(relation), passed});
    };
    auto name = [](char x, GeneratorId i) { return std::string(1, x) + std::to_string(i); };

    std::set<GeneratorId> singles;
    for (const auto& [i, j] : samples) {
        singles.insert(i);
        singles.insert(j);
        if (i == j) continue;
        record("[" + name('a', i) + "," + name('b', j) + "] = e", commutator(a(i), b(j)).is_identity());
        record("[" + name('a', j) + "," + name('b', i) + "] = e", commutator(a(j), b(i)).is_identity());
        record("[" + name('a', i) + "," + name('a', j) + "] = e", commutator(a(i), a(j)).is_identity());
        record("[" + name('b', i) + "," + name('b', j) + "] = e", commutator(b(i), b(j)).is_identity());
    }
    for (GeneratorId i : singles) {
        record("[" + name('a', i) + "," + name('b', i) + "] = c", commutator(a(i), b(i)) == c);
        record("[c," + name('a', i) + "] = e", commutator(c, a(i)).is_identity());
        record("[c," + name('b', i) + "] = e", commutator(c, b(i)).is_identity());
        if (tag == DomainTag::mod_two) {
            record(name('a', i) + "^2 = e", power(a(i), 2).is_identity());
            record(name('b', i) + "^2 = e", power(b(i), 2).is_identity());
        }
    }
    record("c != e", !c.is_identity());
    if (tag == DomainTag::free_int) {
        bool infinite = true;
        ExtElement acc(tag);
        for (unsigned long k = 1; k <= order_bound && infinite; ++k) {
            acc = acc * c;
            infinite = !acc.is_identity();
        }
        record("c^k != e for 1 <= k <= " + std::to_string(order_bound), infinite);
    }
    if (tag == DomainTag::mod_two) record("c^2 = e", power(c, 2).is_identity());
    return report;
}

// ---------------------------------------------------------------- pigeonhole

std::optional<PigeonholeWitness> pigeonhole_commutator(const LabelTable& table) {
    const auto& rows = table.rows;
    std::set<GeneratorId> seen;
    for (const auto& r : rows)
        if (!seen.insert(r.id).second)
            throw PreconditionError("generator id " + std::to_string(r.id) + " appears twice in the label table");

    // Positions sharing each label, ascending.
    std::map<std::string, std::vector<std::size_t>> by_a, by_b;
    for (std::size_t pos = 0; pos < rows.size(); ++pos) {
        by_a[rows[pos].a_label].push_back(pos);
        by_b[rows[pos].b_label].push_back(pos);
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& same_b = by_b[rows[i].b_label];
        for (std::size_t j : by_a[rows[i].a_label]) {
            if (j == i) continue;
            const auto k = std::find_if(same_b.begin(), same_b.end(),
                                        [&](std::size_t pos) { return pos != i && pos != j; });
            if (k == same_b.end()) continue;
            PigeonholeWitness w{rows[i].id, rows[j].id, rows[*k].id, {}};
            const Word left = concat(letter_word(Letter::Kind::a, w.j, -1), letter_word(Letter::Kind::a, w.i));
            const Word right = concat(letter_word(Letter::Kind::b, w.k, -1), letter_word(Letter::Kind::b, w.i));
            w.word = commutator_word(left, right);
            if (!eval_word(w.word, DomainTag::free_int).is_central_generator())
                throw Error("pigeonhole witness does not evaluate to c");
            return w;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- quotients, roots

ExtElement quotient_center(const ExtElement& g, const Integer& n) {
    if (g.tag() != DomainTag::free_int) throw DomainError("quotient by <c^n> needs the free-int extension");
    if (n < 1) throw DomainError("quotient modulus must be at least 1");
    const Integer& current = g.center().modulus;
    if (current != 0 && !mpz_divisible_p(current.get_mpz_t(), n.get_mpz_t()))
        throw DomainError("mod " + to_string(n) + " is not a quotient of mod " + to_string(current));
    return ExtElement(g.center().value, g.shadow(), n);
}

std::optional<unsigned long> element_order(const ExtElement& g, unsigned long bound) {
    ExtElement acc(g.tag(), g.center().modulus);
    for (unsigned long k = 1; k <= bound; ++k) {
        acc = acc * g;
        if (acc.is_identity()) return k;
    }
    return std::nullopt;
}

ExtElement rational_root(const ExtElement& g, unsigned long divisor) {
    if (g.tag() != DomainTag::rational) throw DomainError("roots need the rational extension");
    if (divisor < 1) throw DomainError("root index must be positive");
    // h = (m, y) has h^d = (d m + d(d-1)/2 f(y, y), d y).
    const Rational d{Integer(divisor)};
    const SparseAbelian y = g.shadow().scaled(Rational(1) / d);
    const Rational f = cocycle_eval(y, y).value;
    const Rational pairs = d * (d - Rational(1)) / Rational(2);
    return ExtElement((g.center().value - pairs * f) / d, y);
}

} // namespace ctrep
