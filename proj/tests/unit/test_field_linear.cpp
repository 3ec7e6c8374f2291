#include "doctest.h"
#include "generators.hpp"

using namespace zinbiel;
using namespace zinbiel::testing;

TEST_CASE("field parsing and conformance") {
  CHECK(Field::parse("q").name() == "q");
  CHECK(Field::parse("gf7").p() == 7);
  CHECK_THROWS_AS(Field::parse("gf4"), FieldError);
  CHECK_THROWS_AS(Field::parse("gf3"), FieldError);
  CHECK_THROWS_AS(Field::parse("r"), FieldError);
  Field f3 = Field::parse("gf3", true);
  CHECK_FALSE(f3.conforming());
  CHECK(Field::prime(5).conforming());
}

TEST_CASE("prime field arithmetic") {
  Field f = Field::prime(7);
  CHECK((f.from_int(3) * f.from_int(5)).is_one());
  CHECK(f.from_int(-1) == f.from_int(6));
  CHECK(f.parse_scalar("1/2") == f.from_int(4));
  CHECK(f.parse_scalar("-3/5") == f.from_int(-3) / f.from_int(5));
  CHECK_THROWS_AS(f.parse_scalar("1/7"), ParseError);
  CHECK_THROWS_AS(f.parse_scalar("x"), ParseError);
  CHECK_THROWS_AS(f.zero().inv(), DivisionByZero);
  for (std::uint32_t p : {5u, 7u, 11u}) {
    Field g = Field::prime(p);
    for (std::uint32_t a = 1; a < p; ++a) CHECK((g.from_int(a) * g.from_int(a).inv()).is_one());
  }
}

TEST_CASE("rational arithmetic is exact") {
  Field q = Field::rationals();
  CHECK(q.parse_scalar("-3/6").to_string() == "-1/2");
  CHECK((q.parse_scalar("1/3") + q.parse_scalar("1/6")).to_string() == "1/2");
  CHECK_THROWS_AS(q.parse_scalar("1/0"), ParseError);
  CHECK_THROWS_AS(q.one() + Field::prime(5).one(), FieldError);
}

TEST_CASE("inverse is a two-sided inverse") {
  Rng rng(11);
  for (const Field& f : {Field::prime(7), Field::rationals()}) {
    for (int t = 0; t < 200; ++t) {
      std::size_t n = 1 + rng.below(4);
      LinMap m = random_linmap(rng, f, n, n);
      auto inv = inverse(m);
      CHECK(inv.has_value() == (rank(m) == n));
      if (inv) {
        CHECK(compose(m, *inv).is_identity());
        CHECK(compose(*inv, m).is_identity());
      }
    }
  }
  CHECK_FALSE(inverse(LinMap::zero(Field::prime(5), 2, 3)).has_value());
}

TEST_CASE("rank and kernel") {
  Rng rng(12);
  Field f = Field::prime(5);
  for (int t = 0; t < 200; ++t) {
    std::size_t r = rng.below(4), c = rng.below(4);
    LinMap m = random_linmap(rng, f, r, c, 0.5);
    LinMap k = kernel_basis(m);
    CHECK(rank(m) + k.dom_dim() == c);
    CHECK(compose(m, k).is_zero());
    CHECK(rank(k) == k.dom_dim());
  }
}

TEST_CASE("linear map shape errors") {
  Field f = Field::prime(5);
  LinMap m(f, 2, 3);
  CHECK_THROWS_AS(m.apply(zeros(f, 2)), DimError);
  CHECK_THROWS_AS(compose(m, m), DimError);
  CHECK_THROWS_AS(m.set(0, 0, Field::rationals().one()), FieldError);
}

TEST_CASE("bilinear maps") {
  Field f = Field::prime(5);
  BilMapBuilder b(f, 2, 2, 2);
  b.add(1, 0, 1, f.from_int(3));
  b.add(0, 1, 1, f.from_int(2));
  b.add(0, 1, 1, f.from_int(3));  // cancels to zero
  BilMap m = b.build();
  REQUIRE(m.entries().size() == 1);
  CHECK(m.coeff(1, 0, 1) == f.from_int(3));
  CHECK(m.coeff(0, 1, 1).is_zero());
  CHECK(m.eval({f.from_int(2), f.one()}, {f.one(), f.from_int(4)}) == Vec{f.zero(), f.from_int(24)});
  CHECK_THROWS_AS(m.eval({f.one()}, {f.one(), f.one()}), DimError);

  // Bilinearity on random vectors.
  Rng rng(13);
  BilMap r = random_bilmap(rng, f, 3, 2, 2);
  for (int t = 0; t < 50; ++t) {
    Vec a = random_vec(rng, f, 3), a2 = random_vec(rng, f, 3), c = random_vec(rng, f, 2);
    Scalar s = rng.scalar(f);
    CHECK(r.eval(add(a, scale(s, a2)), c) == add(r.eval(a, c), scale(s, r.eval(a2, c))));
  }
  // Basis change by the identity is the identity.
  CHECK(transform(r, LinMap::identity(f, 2), LinMap::identity(f, 3), LinMap::identity(f, 2)) == r);
}

TEST_CASE("entries are in canonical (k, i, j) order") {
  Rng rng(14);
  Field f = Field::prime(7);
  BilMap m = random_bilmap(rng, f, 3, 3, 3, 0.5);
  for (std::size_t e = 1; e < m.entries().size(); ++e) {
    const auto& a = m.entries()[e - 1];
    const auto& b = m.entries()[e];
    CHECK(std::tie(a.k, a.i, a.j) < std::tie(b.k, b.i, b.j));
  }
}
