#pragma once

#include "zinbiel/unified.hpp"

namespace zinbiel {

struct NotAnIdeal : Error {
  using Error::Error;
};
struct NotComplementary : Error {
  using Error::Error;
};
struct NotSubalgebra : Error {
  using Error::Error;
};
struct ObstructionNonzero : Error {
  using Error::Error;
};

// An extending datum whose ⊳_j and ⊲_j vanish; V carries (d, *_j).
class CrossedSystem {
 public:
  // Throws DimError when a ⊳/⊲ map is non-zero or a map is mistyped.
  explicit CrossedSystem(ExtendingDatum D);
  const ExtendingDatum& embed() const { return D_; }
  const ZinbielTwoAlgebra& Z() const { return D_.Z; }

 private:
  ExtendingDatum D_;
};

// An extending datum with ω_j = 0 and σ = 0 between two 2-algebras Z and V;
// V's multiplications are *_0, *_1, its action (*_2, *_3) and its map d.
class MatchedPairDatum {
 public:
  // Throws DimError when an ω map or σ is non-zero or a map is mistyped.
  explicit MatchedPairDatum(ExtendingDatum D);
  const ExtendingDatum& embed() const { return D_; }
  const ZinbielTwoAlgebra& Z() const { return D_.Z; }

 private:
  ExtendingDatum D_;
};

// V = (V1, V0, d) with *_1, *_0 as products and (*_2, *_3) as the action.
ZinbielTwoAlgebra star_algebra(const ExtendingDatum& D);

// Built from the crossed-product formulas directly (not via the unified product).
ZinbielTwoAlgebra build_crossed_product(const CrossedSystem& cs);
ZinbielTwoAlgebra build_bicrossed_product(const MatchedPairDatum& mp);

// (CZ) list plus the side condition that star_algebra is a 2-algebra, reported
// with prefix "V.". Throws PreconditionError when Z is invalid.
ConditionReport check_crossed_system(const CrossedSystem& cs, const CheckOptions& opt = {});
// (BZ) list plus the same "V." side condition.
ConditionReport check_matched_pair(const MatchedPairDatum& mp, const CheckOptions& opt = {});

// Z is an ideal: image(iota) absorbs every operation of E with arbitrary
// elements on either side. Throws NotAnIdeal naming the first escaping product.
void require_ideal(const ComplementSplit& split);
CrossedSystem check_ideal_extension(const ComplementSplit& split);

// Factorization of E along image(iota_Z) ⊕ image(iota_V) at both levels.
struct FactorInclusions {
  LinMap z1, z0;  // Z_i -> E_i
  LinMap v1, v0;  // V_i -> E_i
};
MatchedPairDatum factorize(const ZinbielTwoAlgebra& E, const FactorInclusions& inc);

}  // namespace zinbiel
