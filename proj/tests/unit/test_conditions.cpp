#include <set>

#include "doctest.h"
#include "generators.hpp"

using namespace zinbiel;
using namespace zinbiel::testing;

namespace {

std::set<std::string> labels(ConditionList l) {
  std::set<std::string> out;
  for (const auto& c : compiled_conditions(l)) out.insert(c.label);
  return out;
}

std::set<std::string> repaired(ConditionList l, bool suspect) {
  std::set<std::string> out;
  for (const auto& c : compiled_conditions(l))
    if (c.corrected && c.suspect() == suspect) out.insert(c.label);
  return out;
}

BilMap one_coeff(const Field& f, std::array<std::size_t, 3> sh, Scalar v) {
  BilMapBuilder b(f, sh[0], sh[1], sh[2]);
  b.add(0, 0, 0, v);
  return b.build();
}

}  // namespace

TEST_CASE("every list has its full item count and unique instance ids") {
  const std::pair<ConditionList, std::size_t> expected[] = {
      {ConditionList::Z, 120}, {ConditionList::ZZ, 40}, {ConditionList::CZ, 61},
      {ConditionList::BZ, 106}, {ConditionList::H, 20}};
  for (auto [l, n] : expected) {
    CAPTURE(list_name(l));
    CHECK(labels(l).size() == n);
    std::set<std::string> ids;
    for (const auto& c : compiled_conditions(l)) {
      CHECK(ids.insert(c.id).second);
      CHECK(c.formula != nullptr);
      // Generic items are instantiated at both levels.
      if (c.level >= 0) CHECK(c.id.find("[i=" + std::to_string(c.level) + "]") != std::string::npos);
    }
  }
  CHECK(labels(ConditionList::Z).count("Z1"));
  CHECK(labels(ConditionList::Z).count("Z120"));
  CHECK(labels(ConditionList::H).count("H20"));
}

TEST_CASE("repair table") {
  CHECK(repaired(ConditionList::ZZ, true) == std::set<std::string>{"ZZ12", "ZZ19"});
  CHECK(repaired(ConditionList::H, true) == std::set<std::string>{"H7"});
  CHECK(repaired(ConditionList::Z, true).empty());
  CHECK(repaired(ConditionList::CZ, true).empty());
  CHECK(repaired(ConditionList::BZ, true).empty());
  CHECK(repaired(ConditionList::Z, false) == std::set<std::string>{"Z26", "Z108"});
  CHECK(repaired(ConditionList::ZZ, false) == std::set<std::string>{"ZZ14", "ZZ38"});
  CHECK(repaired(ConditionList::BZ, false) == std::set<std::string>{"BZ94"});
  CHECK(repaired(ConditionList::H, false) == std::set<std::string>{"H6", "H14", "H20"});
  for (auto l : {ConditionList::Z, ConditionList::ZZ, ConditionList::CZ, ConditionList::BZ, ConditionList::H})
    for (const auto& c : compiled_conditions(l)) {
      if (c.corrected) CHECK_FALSE(c.repair_reason.empty());
      // Unparseable text is only ever repaired, never dropped.
      if (!c.as_written_formula) CHECK(c.corrected.has_value());
    }
}

TEST_CASE("formula parse and type errors") {
  CHECK(formula_error("x_{0}\\cdot y_{0}=0") == "");
  CHECK(formula_error("\\varphi(x_{1})=\\varphi(x_{1})") == "");
  CHECK_FALSE(formula_error("x_{0}\\cdot (y_{0}=0").empty());
  // The dot covers the action (level 1 by level 0) but never mixes Z and V.
  CHECK(formula_error("x_{1}\\cdot y_{0}=0") == "");
  CHECK_FALSE(formula_error("x_{0}\\cdot u_{0}=0").empty());
  CHECK_FALSE(formula_error("\\sigma(u_{1})=\\varphi(x_{1})").empty());
  // d maps V1 to V0, not the reverse.
  CHECK_FALSE(formula_error("d(u_{0})=0").empty());
  CHECK_FALSE(formula_error("x_{0}\\bogus y_{0}=0").empty());
  ExtendingDatum D = ExtendingDatum::trivial(zero_over(ZinbielAlgebra::zero(Field::prime(5), 1)),
                                             TwoVectorSpace::zero_d(Field::prime(5), 1, 1));
  CHECK_THROWS_AS(evaluate_formula("t", "x_{0}\\cdot", {&D}), ParseError);
}

TEST_CASE("single formula evaluation") {
  Field f = Field::prime(5);
  ZinbielTwoAlgebra Z(ZinbielAlgebra::zero(f, 1), ZinbielAlgebra::zero(f, 1), LinMap::identity(f, 1),
                      BimodulePair::zero(f, 1, 1));
  ExtendingDatum D = ExtendingDatum::trivial(Z, TwoVectorSpace::zero_d(f, 1, 1));
  D.sigma.set(0, 0, f.from_int(2));
  auto rep = evaluate_formula("t", "\\sigma(u_{1})=0", {&D});
  REQUIRE(rep.total() == 1);
  CHECK(rep.violations()[0].witness == std::vector<std::size_t>{1});
  CHECK(rep.violations()[0].lhs == Vec{f.from_int(2)});
  CHECK(rep.violations()[0].rhs == Vec{f.zero()});
  CHECK(evaluate_formula("t", "\\sigma(u_{1})-\\sigma(u_{1})=0", {&D}).ok());
}

TEST_CASE("a crossed system violating CZ50") {
  // Z = (0 ⊂ 1-dim, phi = 1), V = (1, 1, d = 0), x0 ↼_2 u1 = x1; then
  // phi(x0 ↼_2 u1) = x0 but the right side vanishes.
  Field f = Field::prime(5);
  ZinbielTwoAlgebra Z(ZinbielAlgebra::zero(f, 1), ZinbielAlgebra::zero(f, 1), LinMap::identity(f, 1),
                      BimodulePair::zero(f, 1, 1));
  ExtendingDatum D = ExtendingDatum::trivial(Z, TwoVectorSpace::zero_d(f, 1, 1));
  D.map(MapKind::HarpoonL, 2) = one_coeff(f, D.expected_shape(MapKind::HarpoonL, 2), f.one());
  auto rep = check_crossed_system(CrossedSystem(D));
  CHECK(rep.has_violation("CZ50"));
  CHECK_FALSE(check_datum_direct(D).ok());
  CHECK_FALSE(check_datum_conditions(D).ok());
}

TEST_CASE("Z conditions agree with the direct check on random data") {
  Rng rng(31);
  Field f = Field::prime(5);
  const double sparsity[] = {0.0, 0.6, 0.85, 0.95};
  int valid = 0;
  for (int t = 0; t < 400; ++t) {
    ExtendingDatum D = random_datum_at(rng, f, 1, 1, 1, 1, sparsity[t % 4]);
    bool direct = check_datum_direct(D).ok();
    valid += direct;
    CHECK(check_datum_conditions(D).ok() == direct);
  }
  CHECK(valid > 0);
}

TEST_CASE("the as-written ZZ19 rejects valid data") {
  // Reconstructed data with dim Z1 = 0 are valid by construction; the
  // as-written form misses the u1 ⊲_3 (...) term and fails on some of them.
  Rng rng(32);
  Field f = Field::prime(5);
  int disagreements = 0, checked = 0;
  for (int t = 0; t < 400 && disagreements == 0; ++t) {
    ZinbielTwoAlgebra E = random_valid_two_algebra(rng, f, 2 + rng.below(2));
    ComplementSplit s{E, LinMap(f, 0, 0), LinMap(f, 0, 0), LinMap(f, 0, 0), LinMap(f, 0, 0)};
    if (!random_split(rng, E, s)) continue;
    s.iota1 = LinMap(f, E.dim1(), 0);
    s.p1 = LinMap(f, 0, E.dim1());
    ExtendingDatum D = extract_datum(s);
    REQUIRE(check_datum_direct(D).ok());
    auto out = evaluate_conditions(ConditionList::ZZ, {&D});
    CHECK(out.report.ok());
    ++checked;
    for (const auto& id : out.disagreeing) {
      CHECK(id.rfind("ZZ19", 0) == 0);
      ++disagreements;
    }
    // Suspect notes accompany every disagreement.
    if (!out.disagreeing.empty()) {
      bool noted = false;
      for (const auto& n : out.report.notes()) noted |= n.kind == "paper-typo-suspect" && n.id.rfind("ZZ19", 0) == 0;
      CHECK(noted);
    }
  }
  CHECK(checked > 0);
  CHECK(disagreements > 0);
}

TEST_CASE("ZZ list requires dim Z1 = 0") {
  Field f = Field::prime(5);
  ExtendingDatum D = ExtendingDatum::trivial(identity_crossed_module(ZinbielAlgebra::zero(f, 1)),
                                             TwoVectorSpace::zero_d(f, 1, 1));
  CHECK_THROWS_AS(check_trivialZ1_conditions(D), PreconditionError);
}

TEST_CASE("invalid Z is a precondition failure") {
  Field f = Field::prime(5);
  BilMapBuilder b(f, 1, 1, 1);
  b.add(0, 0, 0, f.one());
  ZinbielTwoAlgebra Z(ZinbielAlgebra::zero(f, 0), ZinbielAlgebra(1, b.build()), LinMap(f, 1, 0),
                      BimodulePair::zero(f, 1, 0));
  ExtendingDatum D = ExtendingDatum::trivial(Z, TwoVectorSpace::zero_d(f, 0, 1));
  try {
    check_datum_conditions(D);
    FAIL("expected PreconditionError");
  } catch (const PreconditionError& e) {
    CHECK(e.report.has_violation("ZIN0"));
  }
  CHECK_THROWS_AS(check_datum_direct(D), PreconditionError);
}
