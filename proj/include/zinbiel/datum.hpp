#pragma once

#include <array>
#include <string>

#include "zinbiel/core.hpp"

namespace zinbiel {

// The six families of bilinear maps in an extending datum, each indexed by
// j = 0..3 with argument levels given by op_levels(j).
enum class MapKind { HarpoonR, HarpoonL, TriR, TriL, Omega, Star };
inline constexpr std::array<MapKind, 6> kAllMapKinds = {
    MapKind::HarpoonR, MapKind::HarpoonL, MapKind::TriR,
    MapKind::TriL,     MapKind::Omega,    MapKind::Star};

// JSON field stem: "harpoon_r", "harpoon_l", "tri_r", "tri_l", "omega", "star".
const char* map_kind_name(MapKind k);

enum class Space { Z, V };

// Domain and codomain spaces of a map family:
//   ⇀: V x Z -> Z, ↼: Z x V -> Z, ⊳: Z x V -> V, ⊲: V x Z -> V, ω: V x V -> Z, *: V x V -> V.
struct MapSignature {
  Space a, b, c;
};
MapSignature map_signature(MapKind k);

struct ExtendingDatum {
  ZinbielTwoAlgebra Z;
  TwoVectorSpace V;
  std::array<BilMap, 4> harpoon_r, harpoon_l, tri_r, tri_l, omega, star;
  LinMap sigma;  // V1 -> Z0

  // All 24 maps and sigma zero.
  static ExtendingDatum trivial(const ZinbielTwoAlgebra& Z, const TwoVectorSpace& V);

  const Field& field() const { return Z.field(); }
  std::size_t zdim(int level) const { return Z.dim(level); }
  std::size_t vdim(int level) const { return level == 0 ? V.dim0 : V.dim1; }
  std::size_t dim(Space s, int level) const { return s == Space::Z ? zdim(level) : vdim(level); }

  const BilMap& map(MapKind k, int j) const;
  BilMap& map(MapKind k, int j);
  // Shape (dimA, dimB, dimC) that map(k, j) must have.
  std::array<std::size_t, 3> expected_shape(MapKind k, int j) const;
  // Throws DimError naming the first mistyped map.
  void validate() const;

  friend bool operator==(const ExtendingDatum& a, const ExtendingDatum& b);
};

std::string map_field_name(MapKind k, int j);

// Morphism parameters between unified products over the same Z and V:
// phi_i(x, u) = (x + r_i(u), s_i(u)).
struct RSData {
  LinMap r1, r0;  // V_i -> Z_i
  LinMap s1, s0;  // V_i -> V_i
  const LinMap& r(int i) const { return i == 0 ? r0 : r1; }
  const LinMap& s(int i) const { return i == 0 ? s0 : s1; }
  static RSData identity(const ExtendingDatum& D);
};

// E_i = image(iota_i) ⊕ ker(p_i) with p_i ∘ iota_i = id.
struct ComplementSplit {
  ZinbielTwoAlgebra E;
  LinMap iota1, iota0;  // Z_i -> E_i
  LinMap p1, p0;        // E_i -> Z_i
  const LinMap& iota(int i) const { return i == 0 ? iota0 : iota1; }
  const LinMap& p(int i) const { return i == 0 ? p0 : p1; }
};

}  // namespace zinbiel
