// ctrep command-line front end. Every operation goes through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ctrep/ctrep.h"

namespace {

enum ExitCode { kSuccess = 0, kInternal = 1, kUsage = 2 };

struct Failure {
    ctrep_status status;
    std::string message;
};

void check(ctrep_status status) {
    if (status != CTREP_OK) throw Failure{status, ctrep_last_error()};
}

struct StringDeleter {
    void operator()(char* s) const { ctrep_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct SeriesDeleter {
    void operator()(ctrep_series* s) const { ctrep_series_free(s); }
};
struct MatrixDeleter {
    void operator()(ctrep_matrix* m) const { ctrep_matrix_free(m); }
};
struct ExtDeleter {
    void operator()(ctrep_ext* g) const { ctrep_ext_free(g); }
};
using Series = std::unique_ptr<ctrep_series, SeriesDeleter>;
using Matrix = std::unique_ptr<ctrep_matrix, MatrixDeleter>;
using Ext = std::unique_ptr<ctrep_ext, ExtDeleter>;

template <class F>
std::string take_string(F&& call) {
    char* raw = nullptr;
    check(call(&raw));
    OwnedString owned(raw);
    return raw ? std::string(raw) : std::string();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Failure{CTREP_ERR_PARSE, "cannot read " + path};
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Series parse_series(const std::string& text) {
    ctrep_series* raw = nullptr;
    check(ctrep_series_parse(text.c_str(), &raw));
    return Series(raw);
}

Matrix load_matrix(const std::string& path) {
    ctrep_matrix* raw = nullptr;
    check(ctrep_matrix_from_json(read_file(path).c_str(), &raw));
    return Matrix(raw);
}

ctrep_tag parse_tag(const std::string& text) {
    if (text == "free-int" || text == "free_int") return CTREP_TAG_FREE_INT;
    if (text == "mod-two" || text == "mod_two") return CTREP_TAG_MOD_TWO;
    if (text == "rational") return CTREP_TAG_RATIONAL;
    throw Failure{CTREP_ERR_PARSE, "unknown domain tag '" + text + "'"};
}

struct Options {
    std::string format = "text";
    bool json() const { return format == "json"; }
    ctrep_format fmt() const { return json() ? CTREP_FORMAT_JSON : CTREP_FORMAT_TEXT; }
};

std::string ext_text(const ctrep_ext* g, ctrep_format fmt) {
    return take_string([&](char** out) { return ctrep_ext_format(g, fmt, out); });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic for countable-representability constructions", "ctrep"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(ctrep_version()));

    Options opts;
    app.add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::function<void()> action;
    auto bind = [&](CLI::App* cmd, std::function<void()> run) { cmd->callback([&action, run] { action = run; }); };

    // series ---------------------------------------------------------------
    auto* series = app.add_subcommand("series", "Puiseux polynomial arithmetic")->require_subcommand(1);
    std::string series_expr;
    unsigned long series_level = 0;

    auto* s_eval = series->add_subcommand("eval", "Print the canonical form");
    s_eval->add_option("expr", series_expr, "Series expression")->required();
    bind(s_eval, [&] {
        auto s = parse_series(series_expr);
        std::cout << take_string([&](char** out) { return ctrep_series_format(s.get(), opts.fmt(), out); }) << "\n";
    });

    auto* s_val = series->add_subcommand("valuation", "Print the valuation");
    s_val->add_option("expr", series_expr, "Series expression")->required();
    bind(s_val, [&] {
        auto s = parse_series(series_expr);
        std::cout << take_string([&](char** out) { return ctrep_series_valuation(s.get(), opts.fmt(), out); })
                  << "\n";
    });

    auto* s_red = series->add_subcommand("reduce", "Reduce modulo L_n");
    s_red->add_option("expr", series_expr, "Series expression")->required();
    s_red->add_option("--level,-n", series_level, "Level n")->required();
    bind(s_red, [&] {
        auto s = parse_series(series_expr);
        ctrep_series* raw = nullptr;
        check(ctrep_series_reduce(s.get(), series_level, &raw));
        Series r(raw);
        std::cout << take_string([&](char** out) { return ctrep_series_format(r.get(), opts.fmt(), out); }) << "\n";
    });

    // lemma ----------------------------------------------------------------
    auto* lemma = app.add_subcommand("lemma", "Value sets and coset separation bounds")->require_subcommand(1);
    std::vector<std::string> lemma_gens;
    std::string lemma_z;

    auto collect = [](const std::vector<std::string>& exprs, std::vector<Series>& owned) {
        std::vector<const ctrep_series*> ptrs;
        for (const auto& e : exprs) {
            owned.push_back(parse_series(e));
            ptrs.push_back(owned.back().get());
        }
        return ptrs;
    };

    auto* l_vs = lemma->add_subcommand("value-set", "Value set of the subgroup generated by the arguments");
    l_vs->add_option("gens", lemma_gens, "Generator expressions")->required();
    bind(l_vs, [&] {
        std::vector<Series> owned;
        auto ptrs = collect(lemma_gens, owned);
        std::cout << take_string([&](char** out) {
            return ctrep_value_set(ptrs.data(), ptrs.size(), opts.fmt(), out);
        }) << "\n";
    });

    auto* l_cb = lemma->add_subcommand("coset-bound", "Level n with L_n disjoint from z + C");
    l_cb->add_option("--z", lemma_z, "Coset offset")->required();
    l_cb->add_option("--gen", lemma_gens, "Generator of C (repeatable)");
    bind(l_cb, [&] {
        auto z = parse_series(lemma_z);
        std::vector<Series> owned;
        auto ptrs = collect(lemma_gens, owned);
        unsigned long level = 0;
        const std::string report = take_string([&](char** out) {
            return ctrep_coset_bound(z.get(), ptrs.data(), ptrs.size(), &level, opts.fmt(), out);
        });
        std::cout << report << "\n";
    });

    // uni ------------------------------------------------------------------
    auto* uni = app.add_subcommand("uni", "Unitriangular matrices over Puiseux polynomials")->require_subcommand(1);
    std::string matrix_path, zeta_path, gamma_path;
    unsigned long uni_level = 0;

    auto* u_level = uni->add_subcommand("level", "Congruence level of a matrix");
    u_level->add_option("--matrix", matrix_path, "JSON matrix file")->required()->check(CLI::ExistingFile);
    bind(u_level, [&] {
        auto m = load_matrix(matrix_path);
        long level = 0;
        check(ctrep_matrix_congruence_level(m.get(), &level));
        if (opts.json())
            std::cout << "{\"level\":" << (level < 0 ? std::string("\"inf\"") : std::to_string(level)) << "}\n";
        else
            std::cout << "level = " << (level < 0 ? std::string("∞") : std::to_string(level)) << "\n";
    });

    auto* u_depth = uni->add_subcommand("depth", "Lower-central-series depth of a matrix");
    u_depth->add_option("--matrix", matrix_path, "JSON matrix file")->required()->check(CLI::ExistingFile);
    bind(u_depth, [&] {
        auto m = load_matrix(matrix_path);
        long depth = 0;
        check(ctrep_matrix_lcs_depth(m.get(), &depth));
        if (opts.json())
            std::cout << "{\"depth\":" << (depth < 0 ? std::string("\"inf\"") : std::to_string(depth)) << "}\n";
        else
            std::cout << "depth = " << (depth < 0 ? std::string("∞") : std::to_string(depth)) << "\n";
    });

    auto* u_red = uni->add_subcommand("reduce", "Reduce a matrix modulo L_n");
    u_red->add_option("--matrix", matrix_path, "JSON matrix file")->required()->check(CLI::ExistingFile);
    u_red->add_option("--level,-n", uni_level, "Level n")->required();
    bind(u_red, [&] {
        auto m = load_matrix(matrix_path);
        ctrep_matrix* raw = nullptr;
        check(ctrep_matrix_reduce(m.get(), uni_level, &raw));
        Matrix r(raw);
        std::cout << take_string([&](char** out) { return ctrep_matrix_to_json(r.get(), out); }) << "\n";
    });

    auto* u_sep = uni->add_subcommand("separate", "Separate zeta from <gamma> by a congruence level");
    u_sep->add_option("--zeta", zeta_path, "JSON matrix file")->required()->check(CLI::ExistingFile);
    u_sep->add_option("--gamma", gamma_path, "JSON matrix file")->required()->check(CLI::ExistingFile);
    bind(u_sep, [&] {
        auto zeta = load_matrix(zeta_path);
        auto gamma = load_matrix(gamma_path);
        std::cout << take_string([&](char** out) {
            return ctrep_separate(zeta.get(), gamma.get(), nullptr, nullptr, nullptr, opts.fmt(), out);
        }) << "\n";
    });

    // ext ------------------------------------------------------------------
    auto* ext = app.add_subcommand("ext", "Cocycle central extensions")->require_subcommand(1);
    std::string ext_tag = "free-int", ext_word, table_path;
    unsigned long quotient_n = 0, order_bound = 100;
    std::vector<std::uint64_t> sample_indices{1, 2, 3};

    auto* e_eval = ext->add_subcommand("eval", "Evaluate a word to its normal form");
    e_eval->add_option("--tag", ext_tag, "free-int, mod-two or rational")->capture_default_str();
    e_eval->add_option("word", ext_word, "Word in a<i>, b<i>, c")->required();
    bind(e_eval, [&] {
        ctrep_ext* raw = nullptr;
        check(ctrep_ext_eval_word(ext_word.c_str(), parse_tag(ext_tag), &raw));
        Ext g(raw);
        std::string text = ext_text(g.get(), opts.fmt());
        if (!opts.json()) {
            int flag = 0;
            check(ctrep_ext_is_central_generator(g.get(), &flag));
            if (flag) text += " = c";
            check(ctrep_ext_is_identity(g.get(), &flag));
            if (flag) text += " = e";
        }
        std::cout << text << "\n";
    });

    auto* e_check = ext->add_subcommand("check", "Check the defining relations on sampled generators");
    e_check->add_option("--tag", ext_tag, "free-int, mod-two or rational")->capture_default_str();
    e_check->add_option("--index", sample_indices, "Sampled generator indices")->capture_default_str();
    e_check->add_option("--order-bound", order_bound, "Largest k tested in c^k != e")->capture_default_str();
    bind(e_check, [&] {
        std::vector<std::uint64_t> pairs;
        for (std::size_t x = 0; x < sample_indices.size(); ++x)
            for (std::size_t y = x; y < sample_indices.size(); ++y) {
                pairs.push_back(sample_indices[x]);
                pairs.push_back(sample_indices[y]);
            }
        int ok = 0;
        const std::string report = take_string([&](char** out) {
            return ctrep_check_presentation(parse_tag(ext_tag), pairs.data(), pairs.size() / 2, order_bound, &ok,
                                            opts.fmt(), out);
        });
        std::cout << report << "\n";
        if (!ok) throw Failure{CTREP_ERR_PRECONDITION, "presentation check failed"};
    });

    auto* e_pig = ext->add_subcommand("pigeonhole", "Find i, j, k with [a_j^-1 a_i, b_k^-1 b_i] = c");
    e_pig->add_option("--table", table_path, "JSON label table")->required()->check(CLI::ExistingFile);
    bind(e_pig, [&] {
        const std::string table = read_file(table_path);
        int found = 0;
        std::cout << take_string([&](char** out) {
            return ctrep_pigeonhole(table.c_str(), &found, opts.fmt(), out);
        }) << "\n";
    });

    auto* e_quot = ext->add_subcommand("quotient", "Image in the quotient by <c^n>");
    e_quot->add_option("--n", quotient_n, "Order of the quotient center")->required();
    e_quot->add_option("word", ext_word, "Word in a<i>, b<i>, c")->required();
    bind(e_quot, [&] {
        ctrep_ext* raw = nullptr;
        check(ctrep_ext_eval_word(ext_word.c_str(), CTREP_TAG_FREE_INT, &raw));
        Ext g(raw);
        check(ctrep_ext_quotient(g.get(), quotient_n, &raw));
        Ext q(raw);
        std::cout << ext_text(q.get(), opts.fmt()) << "\n";
    });

    // rep ------------------------------------------------------------------
    auto* rep = app.add_subcommand("rep", "Separating families and induced actions")->require_subcommand(1);
    std::string rep_q, group_path, action_path;

    auto* r_dec = rep->add_subcommand("decompose", "Prüfer components of q in Q/Z");
    r_dec->add_option("q", rep_q, "Rational in [0, 1)")->required();
    bind(r_dec, [&] {
        std::cout << take_string([&](char** out) { return ctrep_torsion_decompose(rep_q.c_str(), opts.fmt(), out); })
                  << "\n";
    });

    auto* r_ind = rep->add_subcommand("induce", "Induce a subgroup action up to the whole group");
    r_ind->add_option("--group", group_path, "JSON group table")->required()->check(CLI::ExistingFile);
    r_ind->add_option("--action", action_path, "JSON subgroup action")->required()->check(CLI::ExistingFile);
    bind(r_ind, [&] {
        const std::string group = read_file(group_path);
        const std::string act = read_file(action_path);
        std::cout << take_string([&](char** out) {
            return ctrep_induced_action(group.c_str(), act.c_str(), opts.fmt(), out);
        }) << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (action) action();
    } catch (const Failure& f) {
        std::cerr << "error: " << ctrep_status_name(f.status) << ": " << f.message << "\n";
        return f.status == CTREP_ERR_INTERNAL ? kInternal : kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInternal;
    }
    return kSuccess;
}
