#include "doctest.h"
#include "generators.hpp"

using namespace zinbiel;
using namespace zinbiel::testing;

TEST_CASE("dim-1 idempotent violates the Zinbiel identity") {
  Field q = Field::rationals();
  BilMapBuilder b(q, 1, 1, 1);
  b.add(0, 0, 0, q.one());
  auto rep = check_zinbiel(ZinbielAlgebra(1, b.build()));
  REQUIRE(rep.total() == 1);
  const Violation& v = rep.violations()[0];
  CHECK(v.id == "ZIN");
  CHECK(v.witness == std::vector<std::size_t>{1, 1, 1});
  // (e·e)·e = e and e·(e·e + e·e) = 2e.
  CHECK(v.lhs == Vec{q.one()});
  CHECK(v.rhs == Vec{q.from_int(2)});
}

TEST_CASE("standard instances are 2-algebras") {
  Field q = Field::rationals();
  ZinbielAlgebra A = example_dim2(q);
  CHECK(check_zinbiel(A).ok());
  CHECK(check_crossed_module(zero_over(A)).ok());
  CHECK(check_crossed_module(identity_crossed_module(A)).ok());
  Rng rng(21);
  Field f = Field::prime(5);
  for (int t = 0; t < 20; ++t) {
    ZinbielAlgebra B = random_zinbiel(rng, f, 1 + rng.below(3));
    CHECK(check_crossed_module(identity_crossed_module(B)).ok());
    CHECK(check_crossed_module(two_vector_space_algebra(TwoVectorSpace(2, 1, random_linmap(rng, f, 1, 2)))).ok());
  }
}

TEST_CASE("scaled identity breaks CM3") {
  Field q = Field::rationals();
  ZinbielTwoAlgebra T = identity_crossed_module(example_dim2(q));
  T.phi = LinMap::zero(q, 2, 2);
  T.phi.set(0, 0, q.from_int(2));
  T.phi.set(1, 1, q.from_int(2));
  auto rep = check_crossed_module(T);
  CHECK(rep.has_violation("CM3"));
  CHECK(rep.has_violation("CM4"));
}

TEST_CASE("invalid action is a precondition failure of the semidirect product") {
  Field f = Field::prime(5);
  ZinbielAlgebra Z = ZinbielAlgebra::zero(f, 1);
  BilMapBuilder l(f, 1, 1, 1);
  l.add(0, 0, 0, f.one());
  BimodulePair act{l.build(), BilMap::zero(f, 1, 1, 1)};
  // (x·y)⊳v = 0 but x⊳(y⊳v + v⊲y) = v.
  CHECK(check_bimodule(Z, 1, act).has_violation("B1"));
  CHECK_THROWS_AS(semidirect_product(Z, 1, act), PreconditionError);
}

TEST_CASE("transport preserves validity and yields an isomorphism") {
  Rng rng(22);
  Field f = Field::prime(7);
  for (int t = 0; t < 30; ++t) {
    ZinbielTwoAlgebra T = random_valid_two_algebra(rng, f, 2);
    LinMap g1 = random_invertible(rng, f, 2), g0 = random_invertible(rng, f, 2);
    ZinbielTwoAlgebra U = transport(T, g1, g0);
    CHECK(check_crossed_module(U).ok());
    CHECK(check_2alg_morphism(T, U, {g1, g0}).ok());
    CHECK(is_isomorphism({g1, g0}));
  }
}

TEST_CASE("direct products of 2-algebras") {
  Rng rng(23);
  Field f = Field::prime(5);
  for (int t = 0; t < 20; ++t) {
    auto A = random_valid_two_algebra(rng, f, 1 + rng.below(2));
    auto B = random_valid_two_algebra(rng, f, 1 + rng.below(2));
    CHECK(check_crossed_module(direct_product(A, B)).ok());
  }
}

TEST_CASE("morphism checks detect a non-homomorphism") {
  Field q = Field::rationals();
  ZinbielTwoAlgebra T = identity_crossed_module(example_dim2(q));
  LinMap g = LinMap::identity(q, 2);
  g.set(1, 1, q.from_int(3));  // e1·e1 = e2 is not preserved
  auto rep = check_2alg_morphism(T, T, {g, g});
  CHECK(rep.has_violation("M1"));
  CHECK(rep.has_violation("M2"));
}

TEST_CASE("natural ordering of condition ids") {
  CHECK(id_less("Z2", "Z10"));
  CHECK_FALSE(id_less("Z10", "Z2"));
  CHECK(id_less("Z1.2[i=0]", "Z1.2[i=1]"));
  CHECK(id_less("Z1.2[i=1]", "Z1.3[i=0]"));
  CHECK(id_less("CM1", "CM5"));
  CHECK(id_less("H7", "H20"));
}

TEST_CASE("report cap keeps counting") {
  Field f = Field::prime(5);
  BilMapBuilder b(f, 2, 2, 2);
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) b.add(k, i, j, f.one());
  CheckOptions opt;
  opt.violation_cap = 2;
  auto rep = check_zinbiel(ZinbielAlgebra(2, b.build()), opt);
  CHECK(rep.violations().size() == 2);
  CHECK(rep.total() > 2);
  CHECK(rep.truncated());
}
