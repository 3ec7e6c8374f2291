#include "zinbiel/special.hpp"

namespace zinbiel {

namespace {

std::string coeff_witness(const std::string& name, const BilMap::Entry& e) {
  return name + " has coefficient " + e.v.to_string() + " at (" + std::to_string(e.k + 1) + "," +
         std::to_string(e.i + 1) + "," + std::to_string(e.j + 1) + ")";
}

void require_zero(const ExtendingDatum& D, MapKind k, const char* what) {
  for (int j = 0; j < 4; ++j)
    if (!D.map(k, j).is_zero())
      throw DimError(std::string(what) + ": " + coeff_witness(map_field_name(k, j), D.map(k, j).entries()[0]));
}

Vec slice(const Vec& v, std::size_t from, std::size_t n) {
  return Vec(v.begin() + static_cast<long>(from), v.begin() + static_cast<long>(from + n));
}

// Products of Z ⊕ V evaluated on split coordinates. With `ideal` the
// V-component is u * v alone and phi carries sigma; otherwise (matched pair)
// the Z-component has no ω term and phi is block diagonal.
ZinbielTwoAlgebra assemble(const ExtendingDatum& D, bool ideal) {
  D.validate();
  const Field& F = D.field();
  std::array<BilMap, 4> ops = {BilMap::zero(F, 0, 0, 0), BilMap::zero(F, 0, 0, 0),
                               BilMap::zero(F, 0, 0, 0), BilMap::zero(F, 0, 0, 0)};
  for (int j = 0; j < 4; ++j) {
    const OpLevels lv = op_levels(j);
    const std::size_t za = D.zdim(lv.a), zb = D.zdim(lv.b);
    const std::size_t ea = za + D.vdim(lv.a), eb = zb + D.vdim(lv.b);
    BilMapBuilder b(F, ea, eb, D.zdim(lv.c) + D.vdim(lv.c));
    for (std::size_t s = 0; s < ea; ++s)
      for (std::size_t t = 0; t < eb; ++t) {
        const Vec es = unit(F, ea, s), et = unit(F, eb, t);
        const Vec x = slice(es, 0, za), u = slice(es, za, ea - za);
        const Vec y = slice(et, 0, zb), v = slice(et, zb, eb - zb);
        Vec zc = add(D.Z.op(j).eval(x, y), add(D.harpoon_l[j].eval(x, v), D.harpoon_r[j].eval(u, y)));
        Vec vc = D.star[j].eval(u, v);
        if (ideal) {
          zc = add(zc, D.omega[j].eval(u, v));
        } else {
          vc = add(vc, add(D.tri_r[j].eval(x, v), D.tri_l[j].eval(u, y)));
        }
        b.add_image(s, t, concat(zc, vc));
      }
    ops[j] = b.build();
  }
  LinMap top = hcat(D.Z.phi, ideal ? D.sigma : LinMap::zero(F, D.zdim(0), D.vdim(1)));
  LinMap bottom = hcat(LinMap::zero(F, D.vdim(0), D.zdim(1)), D.V.d);
  LinMap phiE(F, top.cod_dim() + bottom.cod_dim(), top.dom_dim());
  for (std::size_t c = 0; c < top.dom_dim(); ++c) {
    for (std::size_t r = 0; r < top.cod_dim(); ++r) phiE.set(r, c, top.at(r, c));
    for (std::size_t r = 0; r < bottom.cod_dim(); ++r) phiE.set(top.cod_dim() + r, c, bottom.at(r, c));
  }
  return {ZinbielAlgebra(D.zdim(1) + D.vdim(1), ops[1]), ZinbielAlgebra(D.zdim(0) + D.vdim(0), ops[0]),
          phiE, BimodulePair{ops[2], ops[3]}};
}

ConditionReport check_special(ConditionList list, const ExtendingDatum& D, const CheckOptions& opt) {
  require_valid_Z(D);
  ConditionReport rep = evaluate_conditions(list, {&D}, opt).report;
  rep.merge_prefixed(check_crossed_module(star_algebra(D), opt), "V.");
  return rep;
}

}  // namespace

CrossedSystem::CrossedSystem(ExtendingDatum D) : D_(std::move(D)) {
  D_.validate();
  require_zero(D_, MapKind::TriR, "crossed system");
  require_zero(D_, MapKind::TriL, "crossed system");
}

MatchedPairDatum::MatchedPairDatum(ExtendingDatum D) : D_(std::move(D)) {
  D_.validate();
  require_zero(D_, MapKind::Omega, "matched pair");
  if (!D_.sigma.is_zero()) throw DimError("matched pair: sigma must be zero");
}

ZinbielTwoAlgebra star_algebra(const ExtendingDatum& D) {
  return {ZinbielAlgebra(D.vdim(1), D.star[1]), ZinbielAlgebra(D.vdim(0), D.star[0]), D.V.d,
          BimodulePair{D.star[2], D.star[3]}};
}

ZinbielTwoAlgebra build_crossed_product(const CrossedSystem& cs) { return assemble(cs.embed(), true); }

ZinbielTwoAlgebra build_bicrossed_product(const MatchedPairDatum& mp) {
  return assemble(mp.embed(), false);
}

ConditionReport check_crossed_system(const CrossedSystem& cs, const CheckOptions& opt) {
  return check_special(ConditionList::CZ, cs.embed(), opt);
}

ConditionReport check_matched_pair(const MatchedPairDatum& mp, const CheckOptions& opt) {
  return check_special(ConditionList::BZ, mp.embed(), opt);
}

void require_ideal(const ComplementSplit& s) {
  validate_split(s);
  static const char* names[] = {"level-0 product", "level-1 product", "left action", "right action"};
  auto inside = [&](const Vec& r, int level) { return s.iota(level).apply(s.p(level).apply(r)) == r; };
  for (int j = 0; j < 4; ++j) {
    const OpLevels lv = op_levels(j);
    const BilMap& op = s.E.op(j);
    for (std::size_t e = 0; e < s.E.dim(lv.b); ++e)
      for (std::size_t x = 0; x < s.iota(lv.a).dom_dim(); ++x)
        if (!inside(op.eval(s.iota(lv.a).column(x), unit(op.field(), s.E.dim(lv.b), e)), lv.c))
          throw NotAnIdeal(std::string(names[j]) + " of Z basis " + std::to_string(x + 1) +
                           " with E basis " + std::to_string(e + 1) + " leaves image(iota" +
                           std::to_string(lv.c) + ")");
    for (std::size_t e = 0; e < s.E.dim(lv.a); ++e)
      for (std::size_t y = 0; y < s.iota(lv.b).dom_dim(); ++y)
        if (!inside(op.eval(unit(op.field(), s.E.dim(lv.a), e), s.iota(lv.b).column(y)), lv.c))
          throw NotAnIdeal(std::string(names[j]) + " of E basis " + std::to_string(e + 1) +
                           " with Z basis " + std::to_string(y + 1) + " leaves image(iota" +
                           std::to_string(lv.c) + ")");
  }
}

CrossedSystem check_ideal_extension(const ComplementSplit& split) {
  auto erep = check_crossed_module(split.E);
  if (!erep.ok()) throw PreconditionError("E is not a Zinbiel 2-algebra", erep);
  require_ideal(split);
  return CrossedSystem(extract_datum(split));
}

MatchedPairDatum factorize(const ZinbielTwoAlgebra& E, const FactorInclusions& inc) {
  const Field& F = E.field();
  const LinMap* zi[2] = {&inc.z0, &inc.z1};
  const LinMap* vi[2] = {&inc.v0, &inc.v1};
  LinMap p[2] = {LinMap(F, 0, 0), LinMap(F, 0, 0)};
  for (int i : {1, 0}) {
    if (zi[i]->cod_dim() != E.dim(i) || vi[i]->cod_dim() != E.dim(i))
      throw DimError("factorize: inclusions at level " + std::to_string(i) + " must land in E" +
                     std::to_string(i));
    auto inv = inverse(hcat(*zi[i], *vi[i]));
    if (!inv)
      throw NotComplementary("level " + std::to_string(i) + ": image(Z" + std::to_string(i) +
                             ") + image(V" + std::to_string(i) + ") is not a direct sum equal to E" +
                             std::to_string(i));
    const std::size_t z = zi[i]->dom_dim();
    p[i] = LinMap(F, z, E.dim(i));
    for (std::size_t r = 0; r < z; ++r)
      for (std::size_t c = 0; c < E.dim(i); ++c) p[i].set(r, c, inv->at(r, c));
  }
  ComplementSplit split{E, inc.z1, inc.z0, p[1], p[0]};
  try {
    induced_subalgebra(split);
  } catch (const SubalgebraError& e) {
    throw NotSubalgebra(e.what());
  }
  ExtendingDatum D = extract_datum(split, inc.v1, inc.v0);
  for (int j = 0; j < 4; ++j)
    if (!D.omega[j].is_zero())
      throw ObstructionNonzero("image(V) is not closed: " +
                               coeff_witness(map_field_name(MapKind::Omega, j), D.omega[j].entries()[0]));
  for (std::size_t r = 0; r < D.sigma.cod_dim(); ++r)
    for (std::size_t c = 0; c < D.sigma.dom_dim(); ++c)
      if (!D.sigma.at(r, c).is_zero())
        throw ObstructionNonzero("phi_E does not map image(V1) into image(V0): sigma has coefficient " +
                                 D.sigma.at(r, c).to_string() + " at (" + std::to_string(r + 1) + "," +
                                 std::to_string(c + 1) + ")");
  return MatchedPairDatum(std::move(D));
}

}  // namespace zinbiel
