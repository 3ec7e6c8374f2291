#include "zinbiel/datum.hpp"

namespace zinbiel {

const char* map_kind_name(MapKind k) {
  switch (k) {
    case MapKind::HarpoonR: return "harpoon_r";
    case MapKind::HarpoonL: return "harpoon_l";
    case MapKind::TriR: return "tri_r";
    case MapKind::TriL: return "tri_l";
    case MapKind::Omega: return "omega";
    case MapKind::Star: return "star";
  }
  return "?";
}

std::string map_field_name(MapKind k, int j) {
  return std::string(map_kind_name(k)) + "_" + std::to_string(j);
}

MapSignature map_signature(MapKind k) {
  switch (k) {
    case MapKind::HarpoonR: return {Space::V, Space::Z, Space::Z};
    case MapKind::HarpoonL: return {Space::Z, Space::V, Space::Z};
    case MapKind::TriR: return {Space::Z, Space::V, Space::V};
    case MapKind::TriL: return {Space::V, Space::Z, Space::V};
    case MapKind::Omega: return {Space::V, Space::V, Space::Z};
    case MapKind::Star: return {Space::V, Space::V, Space::V};
  }
  throw DimError("bad map kind");
}

std::array<std::size_t, 3> ExtendingDatum::expected_shape(MapKind k, int j) const {
  MapSignature sig = map_signature(k);
  OpLevels lv = op_levels(j);
  return {dim(sig.a, lv.a), dim(sig.b, lv.b), dim(sig.c, lv.c)};
}

const BilMap& ExtendingDatum::map(MapKind k, int j) const {
  return const_cast<ExtendingDatum*>(this)->map(k, j);
}

BilMap& ExtendingDatum::map(MapKind k, int j) {
  if (j < 0 || j > 3) throw DimError("map index out of range");
  switch (k) {
    case MapKind::HarpoonR: return harpoon_r[j];
    case MapKind::HarpoonL: return harpoon_l[j];
    case MapKind::TriR: return tri_r[j];
    case MapKind::TriL: return tri_l[j];
    case MapKind::Omega: return omega[j];
    case MapKind::Star: return star[j];
  }
  throw DimError("bad map kind");
}

namespace {

std::array<BilMap, 4> zero_family(const ZinbielTwoAlgebra& Z, const TwoVectorSpace& V, MapKind k) {
  auto dim = [&](Space s, int lvl) {
    return s == Space::Z ? Z.dim(lvl) : (lvl == 0 ? V.dim0 : V.dim1);
  };
  MapSignature sig = map_signature(k);
  auto mk = [&](int j) {
    OpLevels lv = op_levels(j);
    return BilMap::zero(Z.field(), dim(sig.a, lv.a), dim(sig.b, lv.b), dim(sig.c, lv.c));
  };
  return {mk(0), mk(1), mk(2), mk(3)};
}

}  // namespace

ExtendingDatum ExtendingDatum::trivial(const ZinbielTwoAlgebra& Z, const TwoVectorSpace& V) {
  if (!(V.d.field() == Z.field())) throw FieldError("datum: Z and V over different fields");
  ExtendingDatum D{Z,
                   V,
                   zero_family(Z, V, MapKind::HarpoonR),
                   zero_family(Z, V, MapKind::HarpoonL),
                   zero_family(Z, V, MapKind::TriR),
                   zero_family(Z, V, MapKind::TriL),
                   zero_family(Z, V, MapKind::Omega),
                   zero_family(Z, V, MapKind::Star),
                   LinMap::zero(Z.field(), Z.dim0(), V.dim1)};
  return D;
}

void ExtendingDatum::validate() const {
  if (V.d.dom_dim() != V.dim1 || V.d.cod_dim() != V.dim0) throw DimError("d: shape mismatch");
  for (MapKind k : kAllMapKinds)
    for (int j = 0; j < 4; ++j) {
      auto want = expected_shape(k, j);
      const BilMap& m = map(k, j);
      if (m.dimA() != want[0] || m.dimB() != want[1] || m.dimC() != want[2])
        throw DimError(map_field_name(k, j) + ": expected shape " + std::to_string(want[0]) + "x" +
                       std::to_string(want[1]) + "->" + std::to_string(want[2]) + ", got " +
                       std::to_string(m.dimA()) + "x" + std::to_string(m.dimB()) + "->" +
                       std::to_string(m.dimC()));
      if (!(m.field() == field())) throw FieldError(map_field_name(k, j) + ": wrong field");
    }
  if (sigma.dom_dim() != V.dim1 || sigma.cod_dim() != Z.dim0())
    throw DimError("sigma: expected " + std::to_string(Z.dim0()) + "x" + std::to_string(V.dim1));
}

bool operator==(const ExtendingDatum& a, const ExtendingDatum& b) {
  return a.Z == b.Z && a.V == b.V && a.harpoon_r == b.harpoon_r && a.harpoon_l == b.harpoon_l &&
         a.tri_r == b.tri_r && a.tri_l == b.tri_l && a.omega == b.omega && a.star == b.star &&
         a.sigma == b.sigma;
}

RSData RSData::identity(const ExtendingDatum& D) {
  const Field& f = D.field();
  return {LinMap::zero(f, D.zdim(1), D.vdim(1)), LinMap::zero(f, D.zdim(0), D.vdim(0)),
          LinMap::identity(f, D.vdim(1)), LinMap::identity(f, D.vdim(0))};
}

}  // namespace zinbiel
