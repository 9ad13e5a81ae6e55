#include <doctest.h>

#include <string>

#include "ctrep/ctrep.h"

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    ctrep_string_free(s);
    return out;
}

ctrep_series* series(const char* text) {
    ctrep_series* s = nullptr;
    REQUIRE(ctrep_series_parse(text, &s) == CTREP_OK);
    return s;
}

ctrep_matrix* matrix(const char* json) {
    ctrep_matrix* m = nullptr;
    REQUIRE(ctrep_matrix_from_json(json, &m) == CTREP_OK);
    return m;
}

} // namespace

TEST_SUITE("c api") {
    TEST_CASE("version and status names") {
        CHECK(std::string(ctrep_version()) == "0.1.0");
        CHECK(std::string(ctrep_status_name(CTREP_ERR_PARSE)) == "parse error");
    }

    TEST_CASE("series round trip") {
        ctrep_series* a = series("1 + t");
        ctrep_series* b = series("1 - t");
        ctrep_series* p = nullptr;
        REQUIRE(ctrep_series_mul(a, b, &p) == CTREP_OK);
        char* text = nullptr;
        REQUIRE(ctrep_series_format(p, CTREP_FORMAT_TEXT, &text) == CTREP_OK);
        CHECK(take(text) == "1 - t^2");
        REQUIRE(ctrep_series_format(p, CTREP_FORMAT_JSON, &text) == CTREP_OK);
        const std::string json = take(text);
        CHECK(json == R"j({"q":1,"terms":[[0,"1"],[2,"-1"]]})j");

        ctrep_series* back = nullptr;
        REQUIRE(ctrep_series_from_json(json.c_str(), &back) == CTREP_OK);
        int equal = 0;
        REQUIRE(ctrep_series_equal(back, p, &equal) == CTREP_OK);
        CHECK(equal == 1);

        REQUIRE(ctrep_series_valuation(series("t^(1/2) + 3*t"), CTREP_FORMAT_TEXT, &text) == CTREP_OK);
        CHECK(take(text) == "1/2");
        ctrep_series* zero = nullptr;
        REQUIRE(ctrep_series_sub(a, a, &zero) == CTREP_OK);
        REQUIRE(ctrep_series_valuation(zero, CTREP_FORMAT_JSON, &text) == CTREP_OK);
        CHECK(take(text) == "\"inf\"");

        for (ctrep_series* s : {a, b, p, back, zero}) ctrep_series_free(s);
    }

    TEST_CASE("errors map to status codes") {
        ctrep_series* s = nullptr;
        CHECK(ctrep_series_parse("1 + * t", &s) == CTREP_ERR_PARSE);
        CHECK(s == nullptr);
        CHECK(std::string(ctrep_last_error()).find("position") != std::string::npos);
        CHECK(ctrep_series_parse(nullptr, &s) == CTREP_ERR_ARGUMENT);

        ctrep_series* neg = series("t^(-1)");
        ctrep_series* out = nullptr;
        CHECK(ctrep_series_reduce(neg, 1, &out) == CTREP_ERR_PRECONDITION);
        ctrep_series* zero = series("0");
        CHECK(ctrep_series_invert(zero, "2", &out) == CTREP_ERR_DOMAIN);
        CHECK(ctrep_series_invert(neg, "x", &out) == CTREP_ERR_PARSE);
        ctrep_series_free(neg);
        ctrep_series_free(zero);
        ctrep_series_free(nullptr);
    }

    TEST_CASE("valuation lemma") {
        ctrep_series* gens[] = {series("t"), series("t + t^2")};
        char* text = nullptr;
        REQUIRE(ctrep_value_set(gens, 2, CTREP_FORMAT_TEXT, &text) == CTREP_OK);
        CHECK(take(text) == "{1, 2, ∞}");
        REQUIRE(ctrep_value_set(gens, 2, CTREP_FORMAT_JSON, &text) == CTREP_OK);
        CHECK(take(text) == R"j(["1","2","inf"])j");

        ctrep_series* z = series("t^(1/2)");
        unsigned long level = 99;
        REQUIRE(ctrep_coset_bound(z, gens, 1, &level, CTREP_FORMAT_TEXT, nullptr) == CTREP_OK);
        CHECK(level == 1);
        ctrep_series* inside = series("2*t");
        CHECK(ctrep_coset_bound(inside, gens, 1, &level, CTREP_FORMAT_TEXT, nullptr) == CTREP_ERR_PRECONDITION);

        const char* coeffs[] = {"2", "3", "-1"};
        REQUIRE(ctrep_integer_kernel(coeffs, 3, &text) == CTREP_OK);
        CHECK(take(text).front() == '[');

        for (ctrep_series* s : gens) ctrep_series_free(s);
        ctrep_series_free(z);
        ctrep_series_free(inside);
    }

    TEST_CASE("matrices") {
        ctrep_matrix* zeta = matrix(R"j({"m":3,"entries":[[1,3,"t^(1/2)"]]})j");
        ctrep_matrix* gamma = matrix(R"j({"m":3,"entries":[[1,3,"t"]]})j");
        long level = 0;
        REQUIRE(ctrep_matrix_congruence_level(gamma, &level) == CTREP_OK);
        CHECK(level == 1);
        long depth = 0;
        REQUIRE(ctrep_matrix_lcs_depth(gamma, &depth) == CTREP_OK);
        CHECK(depth == 1);

        unsigned long n = 0;
        std::size_t row = 0, i = 0;
        char* text = nullptr;
        REQUIRE(ctrep_separate(zeta, gamma, &n, &row, &i, CTREP_FORMAT_TEXT, &text) == CTREP_OK);
        CHECK(n == 1);
        CHECK(row == 1);
        CHECK(i == 1);
        CHECK(take(text).rfind("n = 1, p = 1, i = 1", 0) == 0);
        CHECK(ctrep_separate(gamma, gamma, &n, nullptr, nullptr, CTREP_FORMAT_TEXT, nullptr) ==
              CTREP_ERR_PRECONDITION);

        ctrep_matrix *prod = nullptr, *inv = nullptr, *id = nullptr;
        REQUIRE(ctrep_matrix_multiply(zeta, gamma, &prod) == CTREP_OK);
        REQUIRE(ctrep_matrix_invert(prod, &inv) == CTREP_OK);
        REQUIRE(ctrep_matrix_multiply(prod, inv, &id) == CTREP_OK);
        REQUIRE(ctrep_matrix_lcs_depth(id, &depth) == CTREP_OK);
        CHECK(depth == -1);

        ctrep_matrix* reduced = nullptr;
        REQUIRE(ctrep_matrix_reduce(gamma, 0, &reduced) == CTREP_OK);
        int member = 0;
        REQUIRE(ctrep_matrix_congruence_member(gamma, 0, &member) == CTREP_OK);
        CHECK(member == 1);
        REQUIRE(ctrep_matrix_to_json(reduced, &text) == CTREP_OK);
        CHECK(take(text) == R"j({"entries":[],"m":3})j");

        ctrep_matrix* bad = nullptr;
        CHECK(ctrep_matrix_from_json("{\"m\":3,", &bad) == CTREP_ERR_PARSE);

        for (ctrep_matrix* m : {zeta, gamma, prod, inv, id, reduced}) ctrep_matrix_free(m);
    }

    TEST_CASE("hilbert symbol") {
        int s = 0;
        REQUIRE(ctrep_hilbert_symbol_real("-2", "-3", &s) == CTREP_OK);
        CHECK(s == -1);
        CHECK(ctrep_hilbert_symbol_real("0", "1", &s) == CTREP_ERR_PRECONDITION);
        REQUIRE(ctrep_commuting_lift_obstruction("-1/2", &s) == CTREP_OK);
        CHECK(s == 1);
    }

    TEST_CASE("extensions") {
        ctrep_ext* g = nullptr;
        REQUIRE(ctrep_ext_eval_word("comm(a2^-1 a1, b3^-1 b1)", CTREP_TAG_FREE_INT, &g) == CTREP_OK);
        int flag = 0;
        REQUIRE(ctrep_ext_is_central_generator(g, &flag) == CTREP_OK);
        CHECK(flag == 1);
        char* text = nullptr;
        REQUIRE(ctrep_ext_format(g, CTREP_FORMAT_TEXT, &text) == CTREP_OK);
        CHECK(take(text) == "(1, 0)");

        ctrep_ext* c5 = nullptr;
        ctrep_ext* q = nullptr;
        REQUIRE(ctrep_ext_eval_word("c^5", CTREP_TAG_FREE_INT, &c5) == CTREP_OK);
        REQUIRE(ctrep_ext_quotient(c5, 3, &q) == CTREP_OK);
        REQUIRE(ctrep_ext_format(q, CTREP_FORMAT_TEXT, &text) == CTREP_OK);
        CHECK(take(text) == "(2, 0)");
        unsigned long order = 0;
        REQUIRE(ctrep_ext_order(q, 10, &order) == CTREP_OK);
        CHECK(order == 3);
        REQUIRE(ctrep_ext_order(c5, 100, &order) == CTREP_OK);
        CHECK(order == 0);

        ctrep_ext* mixed = nullptr;
        ctrep_ext* two = nullptr;
        REQUIRE(ctrep_ext_eval_word("a1", CTREP_TAG_MOD_TWO, &two) == CTREP_OK);
        CHECK(ctrep_ext_multiply(g, two, &mixed) == CTREP_ERR_DOMAIN);
        CHECK(ctrep_ext_eval_word("a1 ^", CTREP_TAG_FREE_INT, &mixed) == CTREP_ERR_PARSE);

        REQUIRE(ctrep_ext_format(g, CTREP_FORMAT_JSON, &text) == CTREP_OK);
        const std::string json = take(text);
        ctrep_ext* back = nullptr;
        REQUIRE(ctrep_ext_from_json(json.c_str(), &back) == CTREP_OK);
        REQUIRE(ctrep_ext_equal(back, g, &flag) == CTREP_OK);
        CHECK(flag == 1);

        REQUIRE(ctrep_cocycle(R"j({"tag":"free-int","a":[[1,"2"],[2,"1"]],"b":[]})j",
                              R"j({"tag":"free-int","a":[],"b":[[1,"3"]]})j", &text) == CTREP_OK);
        CHECK(take(text) == "6");

        const std::uint64_t pairs[] = {1, 2, 7, 7};
        int ok = 0;
        REQUIRE(ctrep_check_presentation(CTREP_TAG_MOD_TWO, pairs, 2, 100, &ok, CTREP_FORMAT_TEXT, nullptr) ==
                CTREP_OK);
        CHECK(ok == 1);

        int found = 0;
        REQUIRE(ctrep_pigeonhole(R"j([["x","u"],["x","v"],["y","u"]])j", &found, CTREP_FORMAT_TEXT, &text) == CTREP_OK);
        CHECK(found == 1);
        const std::string report = take(text);
        CHECK(report.find("{i:1, j:2, k:3}") != std::string::npos);
        CHECK(report.find("word ↦ c") != std::string::npos);
        REQUIRE(ctrep_pigeonhole(R"j([["x","u"],["z","w"]])j", &found, CTREP_FORMAT_JSON, &text) == CTREP_OK);
        CHECK(found == 0);
        CHECK(take(text) == "null");

        for (ctrep_ext* e : {g, c5, q, two, back}) ctrep_ext_free(e);
    }

    TEST_CASE("representability") {
        char* text = nullptr;
        REQUIRE(ctrep_torsion_decompose("5/6", CTREP_FORMAT_TEXT, &text) == CTREP_OK);
        CHECK(take(text) == "{2 ↦ 1/2, 3 ↦ 1/3}");
        CHECK(ctrep_torsion_decompose("3/2", CTREP_FORMAT_TEXT, &text) == CTREP_ERR_PRECONDITION);

        const char* group = R"j({"elements":["0","1","2","3"],"table":[[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]]})j";
        const char* action = R"j({"subgroup":[0,2],"points":2,"table":[[0,1],[1,0]]})j";
        REQUIRE(ctrep_induced_action(group, action, CTREP_FORMAT_TEXT, &text) == CTREP_OK);
        const std::string report = take(text);
        CHECK(report.find("points = 4") != std::string::npos);
        CHECK(report.find("faithful = yes") != std::string::npos);
    }
}
