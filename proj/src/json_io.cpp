#include "ctrep/json_io.hpp"

#include "ctrep/errors.hpp"

namespace ctrep::json {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw ParseError("malformed JSON: " + what); }

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
    return j.at(key);
}

template <class T>
T get_as(const json& j, const char* what) {
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception&) {
        malformed(std::string("bad ") + what);
    }
}

json encode_coeffs(const SparseAbelian::CoeffMap& m) {
    json out = json::array();
    for (const auto& [i, c] : m) out.push_back({i, encode(c)});
    return out;
}

SparseAbelian::CoeffMap decode_coeffs(const json& j) {
    if (!j.is_array()) malformed("coefficient list");
    SparseAbelian::CoeffMap out;
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 2) malformed("coefficient pair");
        out[get_as<GeneratorId>(entry[0], "generator index")] += decode_rational(entry[1]);
    }
    return out;
}

std::string label_text(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::vector<std::vector<std::size_t>> decode_table(const json& j) {
    return get_as<std::vector<std::vector<std::size_t>>>(j, "table");
}

} // namespace

json encode(const Rational& r) { return r.str(); }

Rational decode_rational(const json& j) {
    if (j.is_number_integer()) return Rational(Integer(j.dump(), 10));
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    malformed("rational");
}

json encode(const ExtValuation& v) { return v.is_infinite() ? std::string("inf") : v.value().str(); }

json encode(const PuiseuxPoly& x) {
    json terms = json::array();
    for (const auto& [j, c] : x.terms()) terms.push_back({j, encode(c)});
    return {{"q", x.ramification()}, {"terms", terms}};
}

PuiseuxPoly decode_series(const json& j) {
    if (j.is_string()) return parse_series(j.get<std::string>());
    if (j.is_number_integer()) return PuiseuxPoly(decode_rational(j));
    const auto q = get_as<PuiseuxPoly::Index>(field(j, "q"), "ramification");
    if (q <= 0) malformed("ramification must be positive");
    const json& terms = field(j, "terms");
    if (!terms.is_array()) malformed("terms");
    PuiseuxPoly::TermMap map;
    for (const auto& t : terms) {
        if (!t.is_array() || t.size() != 2) malformed("term pair");
        map[get_as<PuiseuxPoly::Index>(t[0], "term index")] += decode_rational(t[1]);
    }
    return PuiseuxPoly::from_terms(q, std::move(map));
}

json encode(const UniMatrix& u) {
    json entries = json::array();
    for (std::size_t p = 1; p <= u.size(); ++p)
        for (std::size_t q = p + 1; q <= u.size(); ++q)
            if (!u.upper(p, q).is_zero()) entries.push_back({p, q, encode(u.upper(p, q))});
    return {{"m", u.size()}, {"entries", entries}};
}

UniMatrix decode_matrix(const json& j) {
    const auto m = get_as<std::size_t>(field(j, "m"), "matrix size");
    if (m < 2) malformed("matrix size must be at least 2");
    UniMatrix out(m);
    const json& entries = field(j, "entries");
    if (!entries.is_array()) malformed("entries");
    for (const auto& e : entries) {
        if (!e.is_array() || e.size() != 3) malformed("matrix entry");
        const auto p = get_as<std::size_t>(e[0], "row");
        const auto q = get_as<std::size_t>(e[1], "column");
        if (p < 1 || q > m || p >= q) malformed("entry (" + std::to_string(p) + "," + std::to_string(q) + ")");
        out.set(p, q, out.upper(p, q) + decode_series(e[2]));
    }
    return out;
}

json encode(const SeparationCertificate& c) {
    return {{"n", c.level}, {"p", c.row}, {"i", c.depth}, {"z", encode(c.offset)}, {"step", encode(c.step)},
            {"z_text", c.offset.str()}, {"step_text", c.step.str()}};
}

json encode_value_set(const std::vector<ExtValuation>& values) {
    json out = json::array();
    for (const auto& v : values) out.push_back(encode(v));
    return out;
}

json encode(const CosetBound& b) {
    json basis = json::array();
    for (const auto& g : b.enlarged.generators) basis.push_back(g.str());
    return {{"n", b.level}, {"values", encode_value_set(b.values)}, {"enlarged_basis", basis}};
}

json encode(const SparseAbelian& x) {
    return {{"tag", to_string(x.tag())}, {"a", encode_coeffs(x.a_coeffs())}, {"b", encode_coeffs(x.b_coeffs())}};
}

SparseAbelian decode_abelian(const json& j) {
    const DomainTag tag = parse_domain_tag(get_as<std::string>(field(j, "tag"), "tag"));
    SparseAbelian::CoeffMap a = j.contains("a") ? decode_coeffs(j.at("a")) : SparseAbelian::CoeffMap{};
    SparseAbelian::CoeffMap b = j.contains("b") ? decode_coeffs(j.at("b")) : SparseAbelian::CoeffMap{};
    return SparseAbelian(tag, std::move(a), std::move(b));
}

json encode(const ExtElement& g) {
    json out = {{"tag", to_string(g.tag())},
                {"center", encode(g.center().value)},
                {"shadow", {{"a", encode_coeffs(g.shadow().a_coeffs())}, {"b", encode_coeffs(g.shadow().b_coeffs())}}},
                {"text", g.str()}};
    if (g.tag() == DomainTag::free_int && g.center().modulus != 0) out["modulus"] = to_string(g.center().modulus);
    return out;
}

ExtElement decode_extension(const json& j) {
    const std::string tag_text = get_as<std::string>(field(j, "tag"), "tag");
    json shadow = j.contains("shadow") ? j.at("shadow") : json::object();
    shadow["tag"] = tag_text;
    const Integer modulus = j.contains("modulus") ? decode_rational(j.at("modulus")).numerator() : Integer(0);
    return ExtElement(decode_rational(field(j, "center")), decode_abelian(shadow), modulus);
}

json encode(const Word& w) {
    json letters = json::array();
    for (const auto& l : w.letters) {
        const char* kind = l.kind == Letter::Kind::a ? "a" : l.kind == Letter::Kind::b ? "b" : "c";
        letters.push_back({kind, l.index, l.exponent});
    }
    return {{"letters", letters}, {"text", format_word(w)}};
}

Word decode_word(const json& j) {
    if (j.is_string()) return parse_word(j.get<std::string>());
    const json& letters = field(j, "letters");
    if (!letters.is_array()) malformed("letters");
    Word w;
    for (const auto& l : letters) {
        if (!l.is_array() || l.size() != 3) malformed("letter");
        const auto kind = get_as<std::string>(l[0], "letter kind");
        const auto index = get_as<GeneratorId>(l[1], "letter index");
        const auto exponent = get_as<long>(l[2], "letter exponent");
        if (exponent == 0) malformed("letter exponents must be non-zero");
        if (kind == "a") w.letters.push_back({Letter::Kind::a, index, exponent});
        else if (kind == "b") w.letters.push_back({Letter::Kind::b, index, exponent});
        else if (kind == "c") w.letters.push_back({Letter::Kind::c, 0, exponent});
        else malformed("letter kind '" + kind + "'");
    }
    return w;
}

LabelTable decode_label_table(const json& j) {
    const json& rows = j.is_array() ? j : field(j, "rows");
    if (!rows.is_array()) malformed("label rows");
    LabelTable table;
    GeneratorId next = 1;
    for (const auto& r : rows) {
        if (r.is_array()) {
            if (r.size() != 2) malformed("label pair");
            table.rows.push_back({next++, label_text(r[0]), label_text(r[1])});
        } else {
            const GeneratorId id = r.contains("id") ? get_as<GeneratorId>(r.at("id"), "id") : next;
            next = id + 1;
            table.rows.push_back({id, label_text(field(r, "a")), label_text(field(r, "b"))});
        }
    }
    return table;
}

json encode(const LabelTable& t) {
    json rows = json::array();
    for (const auto& r : t.rows) rows.push_back({{"id", r.id}, {"a", r.a_label}, {"b", r.b_label}});
    return {{"rows", rows}};
}

json encode(const PigeonholeWitness& w) {
    const ExtElement value = eval_word(w.word, DomainTag::free_int);
    return {{"i", w.i},
            {"j", w.j},
            {"k", w.k},
            {"commutator", "comm(a" + std::to_string(w.j) + "^-1 a" + std::to_string(w.i) + ", b" +
                               std::to_string(w.k) + "^-1 b" + std::to_string(w.i) + ")"},
            {"word", encode(w.word)},
            {"value", encode(value)},
            {"evaluates_to_c", value.is_central_generator()}};
}

json encode(const PresentationReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back({{"relation", c.relation}, {"passed", c.passed}});
    return {{"tag", to_string(r.tag)}, {"ok", r.ok()}, {"checks", checks}};
}

json encode(const FiniteGroupTable& g) { return {{"elements", g.names()}, {"table", g.table()}}; }

FiniteGroupTable decode_group(const json& j) {
    std::vector<std::string> names;
    if (j.contains("elements")) names = get_as<std::vector<std::string>>(j.at("elements"), "element names");
    return FiniteGroupTable(std::move(names), decode_table(field(j, "table")));
}

json encode(const FiniteAction& a) {
    return {{"points", a.points()}, {"table", a.table()}, {"kernel", a.kernel()}, {"faithful", a.is_faithful()}};
}

SubgroupAction decode_subgroup_action(const json& j) {
    SubgroupAction act;
    act.subgroup = get_as<std::vector<std::size_t>>(field(j, "subgroup"), "subgroup");
    act.points = get_as<std::size_t>(field(j, "points"), "points");
    act.table = decode_table(field(j, "table"));
    return act;
}

json encode(const InducedAction& a) {
    json classes = json::array();
    for (const auto& [c, x] : a.classes) classes.push_back({a.transversal[c], x});
    json out = encode(a.action);
    out["transversal"] = a.transversal;
    out["classes"] = classes;
    return out;
}

json encode(const SeparationReport& r) {
    json witnesses = json::array();
    for (const auto& w : r.witnesses) witnesses.push_back(w ? json(*w) : json(nullptr));
    return {{"separates", r.separates}, {"witnesses", witnesses}};
}

json encode_decomposition(const std::map<Integer, Rational>& parts) {
    json out = json::object();
    for (const auto& [p, c] : parts) out[p.get_str()] = c.str();
    return out;
}

json parse_document(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
}

} // namespace ctrep::json
