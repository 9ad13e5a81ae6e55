#include "ctrep/ctrep.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "ctrep/errors.hpp"
#include "ctrep/extensions.hpp"
#include "ctrep/json_io.hpp"
#include "ctrep/representability.hpp"
#include "ctrep/unitriangular.hpp"
#include "ctrep/valuation_lemma.hpp"

struct ctrep_series {
    ctrep::PuiseuxPoly value;
};

struct ctrep_matrix {
    ctrep::UniMatrix value;
};

struct ctrep_ext {
    ctrep::ExtElement value;
};

namespace {

using namespace ctrep;

thread_local std::string last_error;

ctrep_status fail(ctrep_status status, const char* what) {
    last_error = what;
    return status;
}

template <class F>
ctrep_status guarded(F&& body) {
    try {
        body();
        return CTREP_OK;
    } catch (const ParseError& e) {
        return fail(CTREP_ERR_PARSE, e.what());
    } catch (const PreconditionError& e) {
        return fail(CTREP_ERR_PRECONDITION, e.what());
    } catch (const DomainError& e) {
        return fail(CTREP_ERR_DOMAIN, e.what());
    } catch (const std::bad_alloc&) {
        return fail(CTREP_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(CTREP_ERR_INTERNAL, e.what());
    }
}

struct NullArgument : std::exception {
    const char* what() const noexcept override { return "null argument"; }
};

template <class... Ptrs>
void require(const Ptrs*... ptrs) {
    if (((ptrs == nullptr) || ...)) throw NullArgument();
}

char* duplicate(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

DomainTag to_tag(ctrep_tag tag) {
    switch (tag) {
    case CTREP_TAG_FREE_INT: return DomainTag::free_int;
    case CTREP_TAG_MOD_TWO: return DomainTag::mod_two;
    case CTREP_TAG_RATIONAL: return DomainTag::rational;
    }
    throw DomainError("unknown domain tag");
}

std::string braced(const std::vector<ExtValuation>& values) {
    std::string out = "{";
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + values[i].str();
    return out + "}";
}

std::vector<PuiseuxPoly> unwrap(const ctrep_series* const* gens, std::size_t count) {
    if (count > 0) require(gens);
    std::vector<PuiseuxPoly> out;
    for (std::size_t i = 0; i < count; ++i) {
        require(gens[i]);
        out.push_back(gens[i]->value);
    }
    return out;
}

template <class Handle, class Value>
void emit(Handle** out, Value value) {
    *out = new Handle{std::move(value)};
}

} // namespace

extern "C" {

const char* ctrep_version(void) { return "0.1.0"; }

const char* ctrep_last_error(void) { return last_error.c_str(); }

const char* ctrep_status_name(ctrep_status status) {
    switch (status) {
    case CTREP_OK: return "ok";
    case CTREP_ERR_PARSE: return "parse error";
    case CTREP_ERR_PRECONDITION: return "precondition violated";
    case CTREP_ERR_DOMAIN: return "domain error";
    case CTREP_ERR_ARGUMENT: return "invalid argument";
    case CTREP_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void ctrep_string_free(char* s) { std::free(s); }

// ---------------------------------------------------------------- series

ctrep_status ctrep_series_parse(const char* text, ctrep_series** out) {
    if (!text || !out) return fail(CTREP_ERR_ARGUMENT, "null argument");
    return guarded([&] { emit(out, parse_series(text)); });
}

ctrep_status ctrep_series_from_json(const char* text, ctrep_series** out) {
    if (!text || !out) return fail(CTREP_ERR_ARGUMENT, "null argument");
    return guarded([&] { emit(out, json::decode_series(json::parse_document(text))); });
}

void ctrep_series_free(ctrep_series* s) { delete s; }

ctrep_status ctrep_series_add(const ctrep_series* a, const ctrep_series* b, ctrep_series** out) {
    if (!a || !b || !out) return fail(CTREP_ERR_ARGUMENT, "null argument");
    return guarded([&] { emit(out, a->value + b->value); });
}

ctrep_status ctrep_series_sub(const ctrep_series* a, const ctrep_series* b, ctrep_series** out) {
    if (!a || !b || !out) return fail(CTREP_ERR_ARGUMENT, "null argument");
    return guarded([&] { emit(out, a->value - b->value); });
}

ctrep_status ctrep_series_mul(const ctrep_series* a, const ctrep_series* b, ctrep_series** out) {
    if (!a || !b || !out) return fail(CTREP_ERR_ARGUMENT, "null argument");
    return guarded([&] { emit(out, a->value * b->value); });
}

ctrep_status ctrep_series_equal(const ctrep_series* a, const ctrep_series* b, int* out) {
    if (!a || !b || !out) return fail(CTREP_ERR_ARGUMENT, "null argument");
    *out = a->value == b->value;
    return CTREP_OK;
}

ctrep_status ctrep_series_format(const ctrep_series* s, ctrep_format format, char** out) {
    if (!s || !out) return fail(CTREP_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        *out = duplicate(format == CTREP_FORMAT_JSON ? json::encode(s->value).dump() : s->value.str());
    });
}

ctrep_status ctrep_series_valuation(const ctrep_series* s, ctrep_format format, char** out) {
    if (!s || !out) return fail(CTREP_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        const ExtValuation v = s->value.valuation();
        *out = duplicate(format == CTREP_FORMAT_JSON ? json::encode(v).dump() : v.str());
    });
}

ctrep_status ctrep_series_residue(const ctrep_series* s, const char* exponent, char** out) {
    if (!s || !exponent || !out) return fail(CTREP_ERR_ARGUMENT, "null argument");
    return guarded([&] { *out = duplicate(residue_at(s->value, Rational::parse(exponent)).str()); });
}

ctrep_status ctrep_series_reduce(const ctrep_series* s, unsigned long n, ctrep_series** out) {
    if (!s || !out) return fail(CTREP_ERR_ARGUMENT, "null argument");
    return guarded([&] { emit(out, reduce_mod_threshold(s->value, n)); });
}

ctrep_status ctrep_series_invert(const ctrep_series* s, const char* cutoff, ctrep_series** out) {
    if (!s || !cutoff || !out) return fail(CTREP_ERR_ARGUMENT, "null argument");
    return guarded([&] { emit(out, invert_truncated(s->value, Rational::parse(cutoff)).value); });
}

// ---------------------------------------------------------------- valuation lemma

ctrep_status ctrep_value_set(const ctrep_series* const* gens, size_t count, ctrep_format format, char** out) {
    if (!out) return fail(CTREP_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        const auto values = value_set(SubgroupBasis{unwrap(gens, count)});
        *out = duplicate(format == CTREP_FORMAT_JSON ? json::encode_value_set(values).dump() : braced(values));
    });
}

ctrep_status ctrep_coset_bound(const ctrep_series* z, const ctrep_series* const* gens, size_t count,
                               unsigned long* level, ctrep_format format, char** report) {
    if (!z || !level) return fail(CTREP_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        const CosetBound bound = coset_separation_bound(CosetSpec{z->value, SubgroupBasis{unwrap(gens, count)}});
        *level = bound.level;
        if (!report) return;
        if (format == CTREP_FORMAT_JSON) {
            *report = duplicate(json::encode(bound).dump());
            return;
        }
        std::string basis;
        for (const auto& g : bound.enlarged.generators) basis += (basis.empty() ? "" : ", ") + g.str();
        *report = duplicate("n = " + std::to_string(bound.level) + "\nvalues = " + braced(bound.values) +
                            "\nbasis = [" + basis + "]");
    });
}

ctrep_status ctrep_integer_kernel(const char* const* coeffs, size_t count, char** out_json) {
    if (!out_json || (count > 0 && !coeffs)) return fail(CTREP_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        std::vector<Rational> values;
        for (std::size_t i = 0; i < count; ++i) {
            require(coeffs[i]);
            values.push_back(Rational::parse(coeffs[i]));
        }
        nlohmann::json basis = nlohmann::json::array();
        for (const auto& row : integer_kernel(values)) {
            nlohmann::json v = nlohmann::json::array();
            for (const auto& x : row) v.push_back(x.get_str());
            basis.push_back(v);
        }
        *out_json = duplicate(basis.dump());
    });
}

// ---------------------------------------------------------------- matrices

ctrep_status ctrep_matrix_from_json(const char* text, ctrep_matrix** out) {
    if (!text || !out) return fail(CTREP_ERR_ARGUMENT, "null argument");
    return guarded([&] { emit(out, json::decode_matrix(json::parse_document(text))); });
}

void ctrep_matrix_free(ctrep_matrix* m) { delete m; }

ctrep_status ctrep_matrix_to_json(const ctrep_matrix* m, char** out) {
    if (!m || !out) return fail(CTREP_ERR_ARGUMENT, "null argument");
    return guarded([&] { *out = duplicate(json::encode(m->value).dump()); });
}

ctrep_status ctrep_matrix_multiply(const ctrep_matrix* a, const ctrep_matrix* b, ctrep_matrix** out) {
    if (!a || !b || !out) return fail(CTREP_ERR_ARGUMENT, "null argument");
    return guarded([&] { emit(out, uni_group_ops(a->value, b->value, GroupOp::multiply)); });
}

ctrep_status ctrep_matrix_invert(const ctrep_matrix* a, ctrep_matrix** out) {
    if (!a || !out) return fail(CTREP_ERR_ARGUMENT, "null argument");
    return guarded([&] { emit(out, uni_group_ops(a->value, a->value, GroupOp::invert)); });
}

ctrep_status ctrep_matrix_commutator(const ctrep_matrix* a, const ctrep_matrix* b, ctrep_matrix** out) {
    if (!a || !b || !out) return fail(CTREP_ERR_ARGUMENT, "null argument");
    return guarded([&] { emit(out, uni_group_ops(a->value, b->value, GroupOp::commutator)); });
}

ctrep_status ctrep_matrix_equal(const ctrep_matrix* a, const ctrep_matrix* b, int* out) {
    if (!a || !b || !out) return fail(CTREP_ERR_ARGUMENT, "null argument");
    *out = a->value == b->value;
    return CTREP_OK;
}

ctrep_status ctrep_matrix_lcs_depth(const ctrep_matrix* m, long* out) {
    if (!m || !out) return fail(CTREP_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        const auto d = lcs_depth(m->value);
        *out = d ? static_cast<long>(*d) : -1L;
    });
}

ctrep_status ctrep_matrix_congruence_level(const ctrep_matrix* m, long* out) {
    if (!m || !out) return fail(CTREP_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        const auto level = congruence_level(m->value);
        *out = level ? static_cast<long>(*level) : -1L;
    });
}

ctrep_status ctrep_matrix_congruence_member(const ctrep_matrix* m, unsigned long n, int* out) {
    if (!m || !out) return fail(CTREP_ERR_ARGUMENT, "null argument");
    return guarded([&] { *out = congruence_membership(m->value, n); });
}

ctrep_status ctrep_matrix_reduce(const ctrep_matrix* m, unsigned long n, ctrep_matrix** out) {
    if (!m || !out) return fail(CTREP_ERR_ARGUMENT, "null argument");
    return guarded([&] { emit(out, reduce_matrix_mod(m->value, n)); });
}

ctrep_status ctrep_matrix_epsilon(const ctrep_matrix* m, size_t row, size_t depth, ctrep_series** out) {
    if (!m || !out) return fail(CTREP_ERR_ARGUMENT, "null argument");
    return guarded([&] { emit(out, epsilon_entry(m->value, row, depth)); });
}

ctrep_status ctrep_separate(const ctrep_matrix* zeta, const ctrep_matrix* gamma, unsigned long* level, size_t* row,
                            size_t* depth, ctrep_format format, char** report) {
    if (!zeta || !gamma) return fail(CTREP_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        const SeparationCertificate cert = central_coset_separator(zeta->value, gamma->value);
        if (level) *level = cert.level;
        if (row) *row = cert.row;
        if (depth) *depth = cert.depth;
        if (!report) return;
        if (format == CTREP_FORMAT_JSON) {
            *report = duplicate(json::encode(cert).dump());
            return;
        }
        *report = duplicate("n = " + std::to_string(cert.level) + ", p = " + std::to_string(cert.row) +
                            ", i = " + std::to_string(cert.depth) + "\nz = " + cert.offset.str() +
                            "\nstep = " + cert.step.str());
    });
}

ctrep_status ctrep_hilbert_symbol_real(const char* a, const char* b, int* out) {
    if (!a || !b || !out) return fail(CTREP_ERR_ARGUMENT, "null argument");
    return guarded([&] { *out = hilbert_symbol_real(Rational::parse(a), Rational::parse(b)); });
}

ctrep_status ctrep_commuting_lift_obstruction(const char* x, int* out) {
    if (!x || !out) return fail(CTREP_ERR_ARGUMENT, "null argument");
    return guarded([&] { *out = commuting_lift_obstruction(Rational::parse(x)); });
}

// ---------------------------------------------------------------- extensions

ctrep_status ctrep_ext_eval_word(const char* word, ctrep_tag tag, ctrep_ext** out) {
    if (!word || !out) return fail(CTREP_ERR_ARGUMENT, "null argument");
    return guarded([&] { emit(out, eval_word(parse_word(word), to_tag(tag))); });
}

ctrep_status ctrep_ext_from_json(const char* text, ctrep_ext** out) {
    if (!text || !out) return fail(CTREP_ERR_ARGUMENT, "null argument");
    return guarded([&] { emit(out, json::decode_extension(json::parse_document(text))); });
}

void ctrep_ext_free(ctrep_ext* g) { delete g; }

ctrep_status ctrep_ext_format(const ctrep_ext* g, ctrep_format format, char** out) {
    if (!g || !out) return fail(CTREP_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        *out = duplicate(format == CTREP_FORMAT_JSON ? json::encode(g->value).dump() : g->value.str());
    });
}

ctrep_status ctrep_ext_multiply(const ctrep_ext* g, const ctrep_ext* h, ctrep_ext** out) {
    if (!g || !h || !out) return fail(CTREP_ERR_ARGUMENT, "null argument");
    return guarded([&] { emit(out, ext_group_ops(g->value, h->value, ExtOp::multiply)); });
}

ctrep_status ctrep_ext_invert(const ctrep_ext* g, ctrep_ext** out) {
    if (!g || !out) return fail(CTREP_ERR_ARGUMENT, "null argument");
    return guarded([&] { emit(out, ext_group_ops(g->value, g->value, ExtOp::invert)); });
}

ctrep_status ctrep_ext_commutator(const ctrep_ext* g, const ctrep_ext* h, ctrep_ext** out) {
    if (!g || !h || !out) return fail(CTREP_ERR_ARGUMENT, "null argument");
    return guarded([&] { emit(out, ext_group_ops(g->value, h->value, ExtOp::commutator)); });
}

ctrep_status ctrep_ext_equal(const ctrep_ext* g, const ctrep_ext* h, int* out) {
    if (!g || !h || !out) return fail(CTREP_ERR_ARGUMENT, "null argument");
    *out = g->value == h->value;
    return CTREP_OK;
}

ctrep_status ctrep_ext_is_identity(const ctrep_ext* g, int* out) {
    if (!g || !out) return fail(CTREP_ERR_ARGUMENT, "null argument");
    *out = g->value.is_identity();
    return CTREP_OK;
}

ctrep_status ctrep_ext_is_central_generator(const ctrep_ext* g, int* out) {
    if (!g || !out) return fail(CTREP_ERR_ARGUMENT, "null argument");
    *out = g->value.is_central_generator();
    return CTREP_OK;
}

ctrep_status ctrep_ext_quotient(const ctrep_ext* g, unsigned long n, ctrep_ext** out) {
    if (!g || !out) return fail(CTREP_ERR_ARGUMENT, "null argument");
    return guarded([&] { emit(out, quotient_center(g->value, Integer(n))); });
}

ctrep_status ctrep_ext_root(const ctrep_ext* g, unsigned long divisor, ctrep_ext** out) {
    if (!g || !out) return fail(CTREP_ERR_ARGUMENT, "null argument");
    return guarded([&] { emit(out, rational_root(g->value, divisor)); });
}

ctrep_status ctrep_ext_order(const ctrep_ext* g, unsigned long bound, unsigned long* out) {
    if (!g || !out) return fail(CTREP_ERR_ARGUMENT, "null argument");
    return guarded([&] { *out = element_order(g->value, bound).value_or(0UL); });
}

ctrep_status ctrep_cocycle(const char* x_json, const char* y_json, char** out) {
    if (!x_json || !y_json || !out) return fail(CTREP_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        const auto x = json::decode_abelian(json::parse_document(x_json));
        const auto y = json::decode_abelian(json::parse_document(y_json));
        *out = duplicate(cocycle_eval(x, y).value.str());
    });
}

ctrep_status ctrep_check_presentation(ctrep_tag tag, const uint64_t* pairs, size_t count, unsigned long order_bound,
                                      int* ok, ctrep_format format, char** report) {
    if (count > 0 && !pairs) return fail(CTREP_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        std::vector<std::pair<GeneratorId, GeneratorId>> samples;
        for (std::size_t k = 0; k < count; ++k) samples.emplace_back(pairs[2 * k], pairs[2 * k + 1]);
        const PresentationReport r = check_presentation(to_tag(tag), samples, order_bound);
        if (ok) *ok = r.ok();
        if (!report) return;
        if (format == CTREP_FORMAT_JSON) {
            *report = duplicate(json::encode(r).dump());
            return;
        }
        std::string text;
        std::size_t passed = 0;
        for (const auto& c : r.checks) {
            text += (c.passed ? "PASS  " : "FAIL  ") + c.relation + "\n";
            passed += c.passed;
        }
        text += to_string(r.tag) + ": " + std::to_string(passed) + "/" + std::to_string(r.checks.size()) +
                " relations hold";
        *report = duplicate(text);
    });
}

ctrep_status ctrep_pigeonhole(const char* table_json, int* found, ctrep_format format, char** report) {
    if (!table_json) return fail(CTREP_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        const auto witness = pigeonhole_commutator(json::decode_label_table(json::parse_document(table_json)));
        if (found) *found = witness.has_value();
        if (!report) return;
        if (format == CTREP_FORMAT_JSON) {
            *report = duplicate(witness ? json::encode(*witness).dump() : std::string("null"));
            return;
        }
        if (!witness) {
            *report = duplicate("no witness");
            return;
        }
        const auto j = json::encode(*witness);
        const bool is_c = j.at("evaluates_to_c").get<bool>();
        *report = duplicate("witness {i:" + std::to_string(witness->i) + ", j:" + std::to_string(witness->j) +
                            ", k:" + std::to_string(witness->k) + "}\nword = " +
                            j.at("commutator").get<std::string>() + "\nword ↦ " +
                            (is_c ? std::string("c") : eval_word(witness->word, DomainTag::free_int).str()));
    });
}

// ---------------------------------------------------------------- representability

ctrep_status ctrep_torsion_decompose(const char* q, ctrep_format format, char** out) {
    if (!q || !out) return fail(CTREP_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        const auto parts = torsion_primary_decompose(Rational::parse(q));
        if (format == CTREP_FORMAT_JSON) {
            *out = duplicate(json::encode_decomposition(parts).dump());
            return;
        }
        std::string text = "{";
        for (const auto& [p, c] : parts) text += (text.size() > 1 ? ", " : "") + p.get_str() + " ↦ " + c.str();
        *out = duplicate(text + "}");
    });
}

ctrep_status ctrep_induced_action(const char* group_json, const char* subgroup_action_json, ctrep_format format,
                                  char** out) {
    if (!group_json || !subgroup_action_json || !out) return fail(CTREP_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        const FiniteGroupTable group = json::decode_group(json::parse_document(group_json));
        const SubgroupAction act = json::decode_subgroup_action(json::parse_document(subgroup_action_json));
        const InducedAction induced = induced_action(group, act);
        if (format == CTREP_FORMAT_JSON) {
            *out = duplicate(json::encode(induced).dump());
            return;
        }
        std::string text = "points = " + std::to_string(induced.action.points()) + "\nfaithful = " +
                           (induced.action.is_faithful() ? "yes" : "no") + "\nkernel = {";
        const auto kernel = induced.action.kernel();
        for (std::size_t k = 0; k < kernel.size(); ++k) text += (k ? ", " : "") + group.name(kernel[k]);
        text += "}";
        for (std::size_t g = 0; g < group.order(); ++g) {
            text += "\n" + group.name(g) + ":";
            for (std::size_t y : induced.action.table()[g]) text += " " + std::to_string(y);
        }
        *out = duplicate(text);
    });
}

} // extern "C"
