#include "doctest.h"
#include "generators.hpp"

using namespace zinbiel;
using namespace zinbiel::testing;

namespace {

LinMap columns(const Field& f, std::size_t n, std::size_t from, std::size_t count) {
  std::vector<Vec> cols;
  for (std::size_t c = 0; c < count; ++c) cols.push_back(unit(f, n, from + c));
  return LinMap::from_columns(f, n, cols);
}

bool omega_nonzero(const ExtendingDatum& D) {
  for (int j = 0; j < 4; ++j)
    if (!D.omega[j].is_zero()) return true;
  return false;
}

}  // namespace

TEST_CASE("crossed products from ideal extensions") {
  Rng rng(51);
  Field f = Field::prime(5);
  int done = 0;
  for (int t = 0; t < 150; ++t) {
    ZinbielTwoAlgebra E = random_valid_two_algebra(rng, f, 2);
    ComplementSplit s = empty_split(E);
    if (!random_split(rng, E, s, SplitKind::Ideal)) continue;
    CrossedSystem cs = check_ideal_extension(s);
    CHECK(build_crossed_product(cs) == build_unified_product(cs.embed()));
    CHECK(check_crossed_system(cs).ok());
    CHECK(check_datum_direct(cs.embed()).ok());
    ++done;
  }
  CHECK(done > 50);
}

TEST_CASE("bicrossed products from factorizations") {
  Rng rng(52);
  Field f = Field::prime(5);
  int done = 0;
  for (int t = 0; t < 150; ++t) {
    ZinbielTwoAlgebra E = random_valid_two_algebra(rng, f, 2);
    FactorInclusions inc{LinMap(f, 0, 0), LinMap(f, 0, 0), LinMap(f, 0, 0), LinMap(f, 0, 0)};
    if (!random_factorization(rng, E, inc)) continue;
    MatchedPairDatum mp = factorize(E, inc);
    ZinbielTwoAlgebra B = build_bicrossed_product(mp);
    CHECK(B == build_unified_product(mp.embed()));
    CHECK(check_matched_pair(mp).ok());
    CHECK(check_crossed_module(star_algebra(mp.embed())).ok());
    // (z, v) -> iota_z(z) + iota_v(v) is an isomorphism onto E.
    TwoMorphism g{hcat(inc.z1, inc.v1), hcat(inc.z0, inc.v0)};
    CHECK(check_2alg_morphism(B, E, g).ok());
    // Refactorizing the bicrossed product along its own summands is the identity.
    CHECK(factorize(B, standard_inclusions(mp.embed())).embed() == mp.embed());
    ++done;
  }
  CHECK(done > 50);
}

TEST_CASE("special verdicts agree with the direct check under perturbation") {
  Rng rng(53);
  Field f = Field::prime(5);
  for (int t = 0; t < 300; ++t) {
    ExtendingDatum D = random_datum_at(rng, f, 1, 1, 1, 1, 0.9);
    for (int j = 0; j < 4; ++j) {
      D.tri_r[j] = BilMap::zero(f, D.tri_r[j].dimA(), D.tri_r[j].dimB(), D.tri_r[j].dimC());
      D.tri_l[j] = BilMap::zero(f, D.tri_l[j].dimA(), D.tri_l[j].dimB(), D.tri_l[j].dimC());
    }
    CHECK(check_crossed_system(CrossedSystem(D)).ok() == check_datum_direct(D).ok());
    ExtendingDatum M = random_datum_at(rng, f, 1, 1, 1, 1, 0.9);
    for (int j = 0; j < 4; ++j)
      M.omega[j] = BilMap::zero(f, M.omega[j].dimA(), M.omega[j].dimB(), M.omega[j].dimC());
    M.sigma = LinMap(f, M.sigma.cod_dim(), M.sigma.dom_dim());
    CHECK(check_matched_pair(MatchedPairDatum(M)).ok() == check_datum_direct(M).ok());
  }
}

TEST_CASE("constructors enforce the vanishing maps") {
  Field f = Field::prime(5);
  ZinbielTwoAlgebra Z = identity_crossed_module(ZinbielAlgebra::zero(f, 1));
  ExtendingDatum D = ExtendingDatum::trivial(Z, TwoVectorSpace::zero_d(f, 1, 1));
  CHECK_NOTHROW(CrossedSystem{D});
  CHECK_NOTHROW(MatchedPairDatum{D});
  ExtendingDatum tri = D;
  BilMapBuilder b(f, 1, 1, 1);
  b.add(0, 0, 0, f.one());
  tri.tri_r[0] = b.build();
  CHECK_THROWS_AS(CrossedSystem{tri}, DimError);
  CHECK_NOTHROW(MatchedPairDatum{tri});
  ExtendingDatum om = D;
  om.omega[0] = b.build();
  CHECK_THROWS_AS(MatchedPairDatum{om}, DimError);
  CHECK_NOTHROW(CrossedSystem{om});
  ExtendingDatum sg = D;
  sg.sigma.set(0, 0, f.one());
  CHECK_THROWS_AS(MatchedPairDatum{sg}, DimError);
}

TEST_CASE("ideal detection") {
  Rng rng(54);
  Field f = Field::prime(5);
  int not_ideal = 0, ideal = 0;
  for (int t = 0; t < 300; ++t) {
    ZinbielTwoAlgebra E = random_valid_two_algebra(rng, f, 2);
    ComplementSplit s = empty_split(E);
    if (!random_split(rng, E, s, SplitKind::Subalgebra)) continue;
    // Independent test: every product with one factor in image(iota) lies in it.
    bool absorbs = true;
    for (int j = 0; j < 4; ++j) {
      OpLevels lv = op_levels(j);
      const BilMap& m = E.op(j);
      auto in_image = [&](const Vec& v) {
        // v in image(iota) iff iota(p(v)) = v.
        return s.iota(lv.c).apply(s.p(lv.c).apply(v)) == v;
      };
      for (std::size_t a = 0; a < s.iota(lv.a).dom_dim(); ++a)
        for (std::size_t e = 0; e < E.dim(lv.b); ++e)
          absorbs &= in_image(m.eval(s.iota(lv.a).column(a), unit(f, E.dim(lv.b), e)));
      for (std::size_t e = 0; e < E.dim(lv.a); ++e)
        for (std::size_t b = 0; b < s.iota(lv.b).dom_dim(); ++b)
          absorbs &= in_image(m.eval(unit(f, E.dim(lv.a), e), s.iota(lv.b).column(b)));
    }
    if (absorbs) {
      ++ideal;
      CHECK_NOTHROW(require_ideal(s));
    } else {
      ++not_ideal;
      CHECK_THROWS_AS(require_ideal(s), NotAnIdeal);
      CHECK_THROWS_AS(check_ideal_extension(s), NotAnIdeal);
    }
  }
  CHECK(ideal > 0);
  CHECK(not_ideal > 0);
}

TEST_CASE("factorize errors") {
  Field q = Field::rationals();
  // E0 = Q^2 with e1·e1 = e2.
  ZinbielTwoAlgebra E = zero_over(example_dim2(q));
  LinMap none(q, 0, 0);
  LinMap e1 = columns(q, 2, 0, 1), e2 = columns(q, 2, 1, 1);
  // Overlapping images.
  CHECK_THROWS_AS(factorize(E, {none, e1, none, e1}), NotComplementary);
  // span(e1) is not a subalgebra.
  CHECK_THROWS_AS(factorize(E, {none, e1, none, e2}), NotSubalgebra);
  // Z = span(e2) is an ideal, V = span(e1) is not closed: ω(e1, e1) = e2.
  try {
    factorize(E, {none, e2, none, e1});
    FAIL("expected ObstructionNonzero");
  } catch (const ObstructionNonzero& e) {
    CHECK(std::string(e.what()).find("omega_0") != std::string::npos);
  }
  // Shapes.
  CHECK_THROWS_AS(factorize(E, {none, columns(q, 3, 0, 1), none, e1}), DimError);
}

TEST_CASE("crossed products with nonzero omega do not factorize") {
  Rng rng(55);
  Field f = Field::prime(5);
  int hits = 0;
  for (int t = 0; t < 400 && hits < 30; ++t) {
    ZinbielTwoAlgebra E = random_valid_two_algebra(rng, f, 2);
    ComplementSplit s = empty_split(E);
    if (!random_split(rng, E, s, SplitKind::Ideal)) continue;
    CrossedSystem cs = check_ideal_extension(s);
    if (!omega_nonzero(cs.embed())) continue;
    ++hits;
    ZinbielTwoAlgebra P = build_crossed_product(cs);
    CHECK_THROWS_AS(factorize(P, standard_inclusions(cs.embed())), ObstructionNonzero);
  }
  CHECK(hits > 0);
}

TEST_CASE("a direct product is a trivial matched pair") {
  Rng rng(56);
  Field f = Field::prime(5);
  for (int t = 0; t < 20; ++t) {
    ZinbielTwoAlgebra A = random_valid_two_algebra(rng, f, 1 + rng.below(2));
    ZinbielTwoAlgebra B = random_valid_two_algebra(rng, f, 1 + rng.below(2));
    ExtendingDatum shape = ExtendingDatum::trivial(A, TwoVectorSpace(B.dim1(), B.dim0(), B.phi));
    MatchedPairDatum mp = factorize(direct_product(A, B), standard_inclusions(shape));
    for (MapKind k : kAllMapKinds)
      for (int j = 0; j < 4; ++j)
        if (k != MapKind::Star) CHECK(mp.embed().map(k, j).is_zero());
    CHECK(star_algebra(mp.embed()) == B);
    CHECK(mp.Z() == A);
  }
}
