#pragma once

#include <optional>
#include <string>
#include <variant>

#include "json.hpp"  // vendored nlohmann::json
#include "zinbiel/classify.hpp"
#include "zinbiel/special.hpp"

namespace zinbiel {

using json = nlohmann::ordered_json;

// Writers. Scalars are strings; bilinear maps are lists of [k, i, j, "c"]
// with 1-based indices in (k, i, j) order, zeros omitted; linear maps are
// lists of rows. Dimensions are carried by the enclosing object.
json to_json(const LinMap& m);
json to_json(const BilMap& m);
json to_json(const ZinbielAlgebra& A);       // kind zinbiel_algebra
json to_json(const ZinbielTwoAlgebra& T);    // kind zinbiel_2_algebra
json to_json(const ExtendingDatum& D);       // kind extending_datum
json to_json(const CrossedSystem& cs);       // kind crossed_system
json to_json(const MatchedPairDatum& mp);    // kind matched_pair
json to_json(const ComplementSplit& s);      // kind complement_split
json to_json(const RSData& rs);              // r1, r0, s1, s0 only
json to_json(const ConditionReport& r);

// Compact dump of to_json(D); the total order used for orbit representatives.
std::string canonical_string(const ExtendingDatum& D);

// Two-space-indented dump followed by a newline.
std::string pretty(const json& j);

struct FactorizationInput {
  ZinbielTwoAlgebra E;
  FactorInclusions inc;
};
struct TwoMorphismInput {
  ZinbielTwoAlgebra source, target;
  TwoMorphism f;
};
struct RSInput {
  ExtendingDatum D, Dp;
  RSData rs;
};

using Document = std::variant<ZinbielAlgebra, ZinbielTwoAlgebra, ExtendingDatum, CrossedSystem,
                              MatchedPairDatum, ComplementSplit, FactorizationInput,
                              TwoMorphismInput, RSInput>;

struct FieldChoice {
  std::optional<Field> override_field;  // from the command line
  bool allow_small_char = false;
};

// Strict reader: unknown or duplicate keys, unsorted or repeated
// coefficients, non-string scalars and shape mismatches are ParseError with
// "file:line: key 'path': message". The field comes from the document's
// "field" key or the override; a disagreement between them is an error, and
// q is used when neither is given.
Document parse_document(const std::string& text, const std::string& filename, const FieldChoice& fc);
Document load_document(const std::string& path, const FieldChoice& fc);

const char* document_kind(const Document& d);

}  // namespace zinbiel
