#include "doctest.h"
#include "generators.hpp"

using namespace zinbiel;
using namespace zinbiel::testing;

TEST_CASE("the trivial datum gives the direct product") {
  Rng rng(41);
  Field f = Field::prime(5);
  for (int t = 0; t < 20; ++t) {
    ZinbielTwoAlgebra Z = random_valid_two_algebra(rng, f, 1 + rng.below(2));
    std::size_t v1 = rng.below(3), v0 = rng.below(3);
    TwoVectorSpace V(v1, v0, random_linmap(rng, f, v0, v1));
    ExtendingDatum D = ExtendingDatum::trivial(Z, V);
    CHECK(build_unified_product(D) == direct_product(Z, two_vector_space_algebra(V)));
    CHECK(check_datum_direct(D).ok());
    CHECK(check_datum_conditions(D).ok());
  }
}

TEST_CASE("E_i has the Z coordinates first") {
  Field q = Field::rationals();
  ZinbielTwoAlgebra Z = zero_over(ZinbielAlgebra::zero(q, 1));
  ExtendingDatum D = ExtendingDatum::trivial(Z, TwoVectorSpace::zero_d(q, 1, 1));
  D.sigma.set(0, 0, q.from_int(3));
  ZinbielTwoAlgebra E = build_unified_product(D);
  REQUIRE(E.dim1() == 1);
  REQUIRE(E.dim0() == 2);
  // phi_E(u1) = sigma(u1) + d(u1).
  CHECK(E.phi.at(0, 0) == q.from_int(3));
  CHECK(E.phi.at(1, 0).is_zero());
}

TEST_CASE("reconstruction roundtrip") {
  Rng rng(42);
  for (const Field& f : {Field::prime(5), Field::prime(7)}) {
    int done = 0;
    for (int t = 0; t < 60; ++t) {
      ZinbielTwoAlgebra E = random_valid_two_algebra(rng, f, 2);
      ComplementSplit s = empty_split(E);
      if (!random_split(rng, E, s)) continue;
      ExtendingDatum D = extract_datum(s);
      CHECK(D.Z == induced_subalgebra(s));
      CHECK(check_datum_direct(D).ok());
      CHECK(check_datum_conditions(D).ok());
      CHECK(verify_psi(s, D).ok());
      TwoMorphism psi = psi_of(s);
      CHECK(is_isomorphism(psi));
      CHECK(check_2alg_morphism(build_unified_product(D), E, psi).ok());
      ++done;
    }
    CHECK(done > 30);
  }
}

TEST_CASE("V = 0 gives psi = iota") {
  Rng rng(43);
  Field f = Field::prime(5);
  ZinbielTwoAlgebra E = random_valid_two_algebra(rng, f, 2);
  ComplementSplit s{E, LinMap::identity(f, 2), LinMap::identity(f, 2), LinMap::identity(f, 2),
                    LinMap::identity(f, 2)};
  ExtendingDatum D = extract_datum(s);
  CHECK(D.vdim(0) == 0);
  CHECK(D.vdim(1) == 0);
  CHECK(D.Z == E);
  CHECK(verify_psi(s, D).ok());
}

TEST_CASE("a different complement basis gives an isomorphic datum") {
  Rng rng(44);
  Field f = Field::prime(5);
  int done = 0;
  for (int t = 0; t < 40; ++t) {
    ZinbielTwoAlgebra E = random_valid_two_algebra(rng, f, 2);
    ComplementSplit s = empty_split(E);
    if (!random_split(rng, E, s)) continue;
    Scalar c = f.from_int(1 + rng.below(4));
    LinMap k0 = LinMap::from_columns(f, 2, {scale(c, complement_basis(s, 0).column(0))});
    ExtendingDatum D = extract_datum(s, complement_basis(s, 1), k0);
    CHECK(check_datum_direct(D).ok());
    CHECK(check_datum_conditions(D).ok());
    ++done;
  }
  CHECK(done > 10);
}

TEST_CASE("split validation errors") {
  Field f = Field::prime(5);
  ZinbielTwoAlgebra E = two_vector_space_algebra(TwoVectorSpace::zero_d(f, 2, 2));
  LinMap e1 = LinMap::from_columns(f, 2, {unit(f, 2, 0)});
  LinMap pr1 = LinMap::from_columns(f, 1, {unit(f, 1, 0), zeros(f, 1)});
  ComplementSplit good{E, e1, e1, pr1, pr1};
  CHECK_NOTHROW(validate_split(good));

  // p ∘ iota is not the identity.
  ComplementSplit bad = good;
  bad.p0 = LinMap::from_columns(f, 1, {zeros(f, 1), unit(f, 1, 0)});
  CHECK_THROWS(validate_split(bad));
  CHECK_THROWS(extract_datum(bad));

  // Wrong shapes.
  ComplementSplit shape = good;
  shape.iota1 = LinMap::identity(f, 3);
  CHECK_THROWS_AS(validate_split(shape), DimError);

  // Complement columns outside ker p.
  CHECK_THROWS_AS(extract_datum(good, e1, e1), DimError);
}

TEST_CASE("a non-closed image is rejected") {
  // E0 = Q^2 with e1·e1 = e2; span(e1) is not closed.
  Field q = Field::rationals();
  ZinbielTwoAlgebra E = zero_over(example_dim2(q));
  LinMap e1 = LinMap::from_columns(q, 2, {unit(q, 2, 0)});
  LinMap pr1 = LinMap::from_columns(q, 1, {unit(q, 1, 0), zeros(q, 1)});
  ComplementSplit s{E, LinMap(q, 0, 0), e1, LinMap(q, 0, 0), pr1};
  CHECK_THROWS_AS(induced_subalgebra(s), SubalgebraError);
  CHECK_THROWS(extract_datum(s));
  // span(e2) is closed (even an ideal).
  ComplementSplit s2{E, LinMap(q, 0, 0), LinMap::from_columns(q, 2, {unit(q, 2, 1)}), LinMap(q, 0, 0),
                     LinMap::from_columns(q, 1, {zeros(q, 1), unit(q, 1, 0)})};
  ExtendingDatum D = extract_datum(s2);
  CHECK(verify_psi(s2, D).ok());
  CHECK(check_datum_conditions(D).ok());
}

TEST_CASE("Z and ZZ lists agree when dim Z1 = 0") {
  Rng rng(45);
  Field f = Field::prime(5);
  const double sparsity[] = {0.0, 0.6, 0.85, 0.95};
  for (int t = 0; t < 300; ++t) {
    ExtendingDatum D = random_datum_at(rng, f, 0, 1, 1, 1, sparsity[t % 4]);
    bool direct = check_datum_direct(D).ok();
    CHECK(check_datum_conditions(D).ok() == direct);
    CHECK(check_trivialZ1_conditions(D).ok() == direct);
  }
}

TEST_CASE("only the actions nonzero gives the semidirect product") {
  Rng rng(46);
  Field f = Field::prime(5);
  int valid = 0;
  for (int t = 0; t < 200; ++t) {
    ZinbielAlgebra A = random_zinbiel(rng, f, 1 + rng.below(2));
    ZinbielTwoAlgebra Z = zero_over(A);
    std::size_t v0 = 1 + rng.below(2);
    ExtendingDatum D = ExtendingDatum::trivial(Z, TwoVectorSpace::zero_d(f, 0, v0));
    BimodulePair act{random_bilmap(rng, f, A.dim, v0, v0, 0.8), random_bilmap(rng, f, v0, A.dim, v0, 0.8)};
    // Every third instance uses the regular bimodule.
    if (t % 3 == 0) {
      v0 = A.dim;
      D = ExtendingDatum::trivial(Z, TwoVectorSpace::zero_d(f, 0, v0));
      act = {A.mult, A.mult};
    }
    D.tri_r[0] = act.left;
    D.tri_l[0] = act.right;
    bool bimodule = check_bimodule(A, v0, act).ok();
    CHECK(check_datum_direct(D).ok() == bimodule);
    if (t % 3 == 0) CHECK(bimodule);
    if (bimodule) {
      ++valid;
      CHECK(build_unified_product(D).Z0 == semidirect_product(A, v0, act));
    }
  }
  CHECK(valid >= 67);
}
