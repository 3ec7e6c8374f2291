#include "doctest.h"
#include "generators.hpp"
#include "zinbiel/json_io.hpp"

using namespace zinbiel;
using namespace zinbiel::testing;

namespace {

// A matrix literal; brace lists of string pairs would otherwise become objects.
json rows(std::vector<std::vector<std::string>> r) {
  json out = json::array();
  for (auto& row : r) out.push_back(json(row));
  return out;
}

Document reparse(const json& j, const FieldChoice& fc = {}) { return parse_document(pretty(j), "doc.json", fc); }

// Message of the ParseError raised by parsing text, or "" when it parses.
std::string error_of(const std::string& text, const FieldChoice& fc = {}) {
  try {
    parse_document(text, "bad.json", fc);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

const char* kAlgebra = R"({
  "kind": "zinbiel_algebra",
  "field": "q",
  "dim": 2,
  "mult": [[2, 1, 1, "1"]]
})";

}  // namespace

TEST_CASE("writers use strings, 1-based sorted entries and rows") {
  Field q = Field::rationals();
  BilMapBuilder b(q, 2, 2, 2);
  b.add(1, 0, 0, q.parse_scalar("-1/2"));
  b.add(0, 1, 0, q.from_int(3));
  CHECK(to_json(b.build()).dump() == R"([[1,2,1,"3"],[2,1,1,"-1/2"]])");
  LinMap m(q, 2, 1);
  m.set(1, 0, q.from_int(5));
  CHECK(to_json(m).dump() == R"([["0"],["5"]])");
  CHECK(to_json(example_dim2(q)).dump() == R"({"kind":"zinbiel_algebra","field":"q","dim":2,"mult":[[2,1,1,"1"]]})");
  CHECK(pretty(json::array()) == "[]\n");
}

TEST_CASE("every kind round-trips") {
  Rng rng(71);
  Field f = Field::prime(7);
  for (int t = 0; t < 30; ++t) {
    ZinbielAlgebra A = random_zinbiel(rng, f, 1 + rng.below(3));
    CHECK(std::get<ZinbielAlgebra>(reparse(to_json(A))) == A);

    ZinbielTwoAlgebra T = random_valid_two_algebra(rng, f, 1 + rng.below(2));
    CHECK(std::get<ZinbielTwoAlgebra>(reparse(to_json(T))) == T);

    ExtendingDatum D = random_datum_at(rng, f, rng.below(2), 1, rng.below(2), 1 + rng.below(2), 0.5);
    Document d = reparse(to_json(D));
    CHECK(document_kind(d) == std::string("extending_datum"));
    CHECK(std::get<ExtendingDatum>(d) == D);
    CHECK(canonical_string(std::get<ExtendingDatum>(d)) == canonical_string(D));

    ExtendingDatum C = D;
    for (int j = 0; j < 4; ++j) {
      C.tri_r[j] = BilMap::zero(f, C.tri_r[j].dimA(), C.tri_r[j].dimB(), C.tri_r[j].dimC());
      C.tri_l[j] = BilMap::zero(f, C.tri_l[j].dimA(), C.tri_l[j].dimB(), C.tri_l[j].dimC());
    }
    CHECK(std::get<CrossedSystem>(reparse(to_json(CrossedSystem(C)))).embed() == C);

    ExtendingDatum M = D;
    for (int j = 0; j < 4; ++j)
      M.omega[j] = BilMap::zero(f, M.omega[j].dimA(), M.omega[j].dimB(), M.omega[j].dimC());
    M.sigma = LinMap(f, M.sigma.cod_dim(), M.sigma.dom_dim());
    CHECK(std::get<MatchedPairDatum>(reparse(to_json(MatchedPairDatum(M)))).embed() == M);

    ZinbielTwoAlgebra E = random_valid_two_algebra(rng, f, 2);
    ComplementSplit s = empty_split(E);
    if (random_split(rng, E, s)) {
      auto back = std::get<ComplementSplit>(reparse(to_json(s)));
      CHECK(back.E == s.E);
      CHECK(back.iota1 == s.iota1);
      CHECK(back.iota0 == s.iota0);
      CHECK(back.p1 == s.p1);
      CHECK(back.p0 == s.p0);
    }
  }
}

TEST_CASE("input-only kinds") {
  Field f = Field::prime(5);
  ExtendingDatum D = ExtendingDatum::trivial(zero_over(ZinbielAlgebra::zero(f, 1)), TwoVectorSpace::zero_d(f, 0, 1));
  json body = to_json(D);
  body.erase("kind");
  body.erase("field");
  json rs = {{"kind", "rs_data"}, {"field", "gf5"}, {"D", body}, {"Dp", body}, {"r1", json::array()},
             {"r0", rows({{"2"}})}, {"s1", json::array()}, {"s0", rows({{"1"}})}};
  auto in = std::get<RSInput>(reparse(rs));
  CHECK(in.D == D);
  CHECK(in.rs.r0.at(0, 0) == f.from_int(2));
  CHECK(in.rs.r1.cod_dim() == 0);

  ZinbielTwoAlgebra T = identity_crossed_module(example_dim2(f));
  json tb = to_json(T);
  tb.erase("kind");
  tb.erase("field");
  json mor = {{"kind", "two_morphism"}, {"field", "gf5"}, {"source", tb}, {"target", tb},
              {"phi1", rows({{"1", "0"}, {"0", "1"}})}, {"phi0", rows({{"1", "0"}, {"0", "1"}})}};
  auto tm = std::get<TwoMorphismInput>(reparse(mor));
  CHECK(tm.source == T);
  CHECK(tm.f.phi0.is_identity());

  json fac = {{"kind", "factorization"}, {"field", "gf5"}, {"E", tb}, {"z1", rows({{"0"}, {"1"}})},
              {"z0", rows({{"0"}, {"1"}})}, {"v1", rows({{"1"}, {"0"}})}, {"v0", rows({{"1"}, {"0"}})}};
  auto fi = std::get<FactorizationInput>(reparse(fac));
  CHECK(fi.inc.z0.at(1, 0).is_one());
}

TEST_CASE("omitted maps are zero and the field defaults to q") {
  auto d = parse_document(R"({"kind": "zinbiel_2_algebra", "dim1": 1, "dim0": 1})", "x.json", {});
  const auto& T = std::get<ZinbielTwoAlgebra>(d);
  CHECK(T.field() == Field::rationals());
  CHECK(T.phi.is_zero());
  CHECK(T.Z0.mult.is_zero());
}

TEST_CASE("field selection") {
  FieldChoice gf5{Field::prime(5), false};
  auto a = std::get<ZinbielAlgebra>(parse_document(R"({"kind": "zinbiel_algebra", "dim": 1})", "x", gf5));
  CHECK(a.mult.field() == Field::prime(5));
  CHECK(error_of(kAlgebra, gf5) == "bad.json:3: key 'field': field 'q' conflicts with --field gf5");
  CHECK(error_of(R"({"kind": "zinbiel_algebra", "field": "gf3", "dim": 1})").find("gf3") != std::string::npos);
  FieldChoice small{std::nullopt, true};
  CHECK(error_of(R"({"kind": "zinbiel_algebra", "field": "gf3", "dim": 1})", small) == "");
}

TEST_CASE("errors carry file, line and key") {
  CHECK(error_of(kAlgebra) == "");
  CHECK(error_of("{\n  \"kind\": \"zinbiel_algebra\",\n  \"dim\": 2,\n  \"mult\": [[2, 1, 1, 1]]\n}") ==
        "bad.json:4: key 'mult[0][3]': scalars must be strings such as \"3\" or \"-1/2\"");
  CHECK(error_of("{\n  \"kind\": \"zinbiel_algebra\",\n  \"dim\": 1,\n  \"dim\": 1\n}") ==
        "bad.json:4: key 'dim': duplicate key");
  CHECK(error_of("{\n  \"kind\": \"zinbiel_algebra\",\n  \"dim\": 1,\n  \"extra\": 0\n}") ==
        "bad.json:4: key 'extra': unknown key");
  CHECK(error_of("{\"kind\": \"nope\"}") == "bad.json:1: key 'kind': unknown kind 'nope'");
  CHECK(error_of("{\n  \"kind\": \"zinbiel_algebra\"\n}").find("missing key 'dim'") != std::string::npos);
  CHECK(error_of("{\n  \"kind\": \"zinbiel_algebra\",\n  \"dim\": 2,\n  \"mult\": [[2, 1, 1, \"1\"], [1, 1, 1, \"1\"]]\n}")
            .find("sorted") != std::string::npos);
  CHECK(error_of("{\n  \"kind\": \"zinbiel_algebra\",\n  \"dim\": 2,\n  \"mult\": [[3, 1, 1, \"1\"]]\n}")
            .find("bad.json:4:") == 0);
  CHECK(error_of("{\n  \"kind\": \"zinbiel_algebra\",\n  \"dim\": 1,\n  \"mult\": [[1, 1, 1, \"1/0\"]]\n}")
            .find("zero denominator") != std::string::npos);
  // Malformed JSON is located too.
  CHECK(error_of("{\n  \"kind\": \"zinbiel_algebra\",\n  \"dim\": 1,\n}").find("bad.json:4: malformed JSON") == 0);
  CHECK_THROWS_AS(load_document("/nonexistent/file.json", {}), ParseError);
}

TEST_CASE("reports serialize with witnesses") {
  Field q = Field::rationals();
  BilMapBuilder b(q, 1, 1, 1);
  b.add(0, 0, 0, q.one());
  json j = to_json(check_zinbiel(ZinbielAlgebra(1, b.build())));
  CHECK(j.dump() ==
        R"({"ok":false,"conforming_field":true,"violation_count":1,"violations":[{"id":"ZIN","witness":[1,1,1],"vars":[],"lhs":["1"],"rhs":["2"]}]})");
}
