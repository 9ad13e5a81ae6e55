#pragma once

#include <json.hpp>

#include "ctrep/extensions.hpp"
#include "ctrep/puiseux.hpp"
#include "ctrep/representability.hpp"
#include "ctrep/unitriangular.hpp"
#include "ctrep/valuation_lemma.hpp"

// Interchange encodings. Decoders throw ParseError on malformed documents.
//
//   series      {"q": 2, "terms": [[1, "3/2"], [4, "-1"]]}   (or an expression string)
//   matrix      {"m": 3, "entries": [[1, 3, <series>], ...]}   1-based, p < q
//   abelian     {"tag": "free-int", "a": [[1, "2"]], "b": [[2, "-1"]]}
//   extension   {"tag": ..., "center": "3", "modulus": "5", "shadow": {"a": [...], "b": [...]}}
//   word        {"letters": [["a", 2, -1], ["c", 0, 5]]}      (or a word string)
//   label table {"rows": [{"id": 1, "a": "x", "b": "u"}, ...]} (or [["x", "u"], ...], ids 1..N)
//   group       {"elements": ["e", ...], "table": [[0, 1], [1, 0]]}
//   action      {"points": 2, "table": [[0, 1], [1, 0]]}
//   G0 action   {"subgroup": [0, 2], "points": 2, "table": [[0, 1], [1, 0]]}
namespace ctrep::json {

using nlohmann::json;

json encode(const Rational& r);
Rational decode_rational(const json& j);

json encode(const ExtValuation& v);  // "1/2" or "inf"

json encode(const PuiseuxPoly& x);
PuiseuxPoly decode_series(const json& j);

json encode(const UniMatrix& u);
UniMatrix decode_matrix(const json& j);

json encode(const SeparationCertificate& c);
json encode(const CosetBound& b);
json encode_value_set(const std::vector<ExtValuation>& values);

json encode(const SparseAbelian& x);
SparseAbelian decode_abelian(const json& j);
json encode(const ExtElement& g);
ExtElement decode_extension(const json& j);

json encode(const Word& w);
Word decode_word(const json& j);

LabelTable decode_label_table(const json& j);
json encode(const LabelTable& t);
json encode(const PigeonholeWitness& w);
json encode(const PresentationReport& r);

json encode(const FiniteGroupTable& g);
FiniteGroupTable decode_group(const json& j);
json encode(const FiniteAction& a);
SubgroupAction decode_subgroup_action(const json& j);
json encode(const InducedAction& a);
json encode(const SeparationReport& r);
json encode_decomposition(const std::map<Integer, Rational>& parts);

/// Parses text into a document, rethrowing syntax errors as ParseError.
json parse_document(std::string_view text);

} // namespace ctrep::json
