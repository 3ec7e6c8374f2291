#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "zinbiel/datum.hpp"
#include "zinbiel/special.hpp"

namespace zinbiel::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(g_); }
  bool coin(double p_true) { return std::bernoulli_distribution(p_true)(g_); }
  // Uniform in GF(p); for Q a small integer or half-integer.
  Scalar scalar(const Field& f);
  // Zero with probability `sparsity`, otherwise uniform non-zero.
  Scalar sparse_scalar(const Field& f, double sparsity);
  std::mt19937_64& engine() { return g_; }

 private:
  std::mt19937_64 g_;
};

Vec random_vec(Rng& rng, const Field& f, std::size_t n);
LinMap random_linmap(Rng& rng, const Field& f, std::size_t cod, std::size_t dom, double sparsity = 0.0);
LinMap random_invertible(Rng& rng, const Field& f, std::size_t n);
BilMap random_bilmap(Rng& rng, const Field& f, std::size_t a, std::size_t b, std::size_t c,
                     double sparsity = 0.0);

// Random Zinbiel algebra of the given dimension (<= 3): a filtered strictly
// triangular structure conjugated by a random change of basis.
ZinbielAlgebra random_zinbiel(Rng& rng, const Field& f, std::size_t dim);

// The dimension-2 algebra e1·e1 = e2.
ZinbielAlgebra example_dim2(const Field& f);

// Random valid 2-algebra with both levels of dimension n (n <= 3), drawn from
// several constructions and conjugated levelwise.
ZinbielTwoAlgebra random_valid_two_algebra(Rng& rng, const Field& f, std::size_t n);

enum class SplitKind { Subalgebra, Ideal };

// Random 1-dim-per-level sub-2-algebra (or ideal) of E with a random
// complement. Returns false when E has none. Prime fields only.
bool random_split(Rng& rng, const ZinbielTwoAlgebra& E, ComplementSplit& out,
                  SplitKind kind = SplitKind::Subalgebra);

// E (dims <= 3, prime field) written as the direct sum of two non-zero
// sub-2-algebras, chosen uniformly among all such pairs, with random bases.
// Returns false when no such pair exists.
bool random_factorization(Rng& rng, const ZinbielTwoAlgebra& E, FactorInclusions& out);

// Split with empty maps, to be filled by random_split.
ComplementSplit empty_split(const ZinbielTwoAlgebra& E);

// Inclusions of Z and V into E = Z ⊕ V, Z coordinates first.
FactorInclusions standard_inclusions(const ExtendingDatum& D);

// Datum over Z and V with every structure constant drawn independently.
ExtendingDatum random_datum(Rng& rng, const ZinbielTwoAlgebra& Z, const TwoVectorSpace& V,
                            double sparsity = 0.0);

// Z = (Z1, Z0) zero algebras with random phi and the only valid (zero) action
// when both dims are <= 1.
ZinbielTwoAlgebra random_small_Z(Rng& rng, const Field& f, std::size_t z1, std::size_t z0);

// Datum at dims (z1, z0, v1, v0) with random Z (dims <= 1), random d and maps.
ExtendingDatum random_datum_at(Rng& rng, const Field& f, std::size_t z1, std::size_t z0,
                               std::size_t v1, std::size_t v0, double sparsity = 0.0);

// Calls fn on every datum over Z and V with all free scalars ranging over GF(p),
// in lexicographic order of the coefficient list. Returns the number visited.
template <class Fn>
std::uint64_t for_each_datum(const ZinbielTwoAlgebra& Z, const TwoVectorSpace& V, Fn&& fn);

// Implementation of for_each_datum.
struct DatumSlot {
  MapKind kind;
  int j;
  std::size_t k, i, jj;
  bool is_sigma;
};
std::vector<DatumSlot> datum_slots(const ExtendingDatum& proto);
ExtendingDatum datum_from_digits(const ExtendingDatum& proto, const std::vector<DatumSlot>& slots,
                                 const std::vector<std::uint32_t>& digits);

template <class Fn>
std::uint64_t for_each_datum(const ZinbielTwoAlgebra& Z, const TwoVectorSpace& V, Fn&& fn) {
  const Field& f = Z.field();
  ExtendingDatum proto = ExtendingDatum::trivial(Z, V);
  auto slots = datum_slots(proto);
  std::vector<std::uint32_t> digits(slots.size(), 0);
  std::uint64_t count = 0;
  while (true) {
    fn(datum_from_digits(proto, slots, digits));
    ++count;
    std::size_t s = slots.size();
    while (s > 0) {
      --s;
      if (++digits[s] < f.p()) break;
      digits[s] = 0;
      if (s == 0) return count;
    }
    if (slots.empty()) return count;
  }
}

}  // namespace zinbiel::testing
