#include "zinbiel/unified.hpp"

namespace zinbiel {

ZinbielTwoAlgebra build_unified_product(const ExtendingDatum& D) {
  D.validate();
  const Field& F = D.field();
  std::array<BilMap, 4> ops = {BilMap::zero(F, 0, 0, 0), BilMap::zero(F, 0, 0, 0),
                               BilMap::zero(F, 0, 0, 0), BilMap::zero(F, 0, 0, 0)};
  for (int j = 0; j < 4; ++j) {
    const OpLevels lv = op_levels(j);
    const std::size_t za = D.zdim(lv.a), zb = D.zdim(lv.b), zc = D.zdim(lv.c);
    BilMapBuilder b(F, za + D.vdim(lv.a), zb + D.vdim(lv.b), zc + D.vdim(lv.c));
    // Offsets of the V block in argument a, argument b and the result.
    auto put = [&](const BilMap& m, std::size_t oa, std::size_t ob, std::size_t oc) {
      for (const auto& e : m.entries()) b.add(oc + e.k, oa + e.i, ob + e.j, e.v);
    };
    put(D.Z.op(j), 0, 0, 0);
    put(D.harpoon_l[j], 0, zb, 0);
    put(D.harpoon_r[j], za, 0, 0);
    put(D.omega[j], za, zb, 0);
    put(D.tri_r[j], 0, zb, zc);
    put(D.tri_l[j], za, 0, zc);
    put(D.star[j], za, zb, zc);
    ops[j] = b.build();
  }
  // φ_E = [[φ, σ], [0, d]].
  const std::size_t e1 = D.zdim(1) + D.vdim(1), e0 = D.zdim(0) + D.vdim(0);
  LinMap phiE(F, e0, e1);
  for (std::size_t r = 0; r < D.zdim(0); ++r) {
    for (std::size_t c = 0; c < D.zdim(1); ++c) phiE.set(r, c, D.Z.phi.at(r, c));
    for (std::size_t c = 0; c < D.vdim(1); ++c) phiE.set(r, D.zdim(1) + c, D.sigma.at(r, c));
  }
  for (std::size_t r = 0; r < D.vdim(0); ++r)
    for (std::size_t c = 0; c < D.vdim(1); ++c) phiE.set(D.zdim(0) + r, D.zdim(1) + c, D.V.d.at(r, c));
  return {ZinbielAlgebra(e1, ops[1]), ZinbielAlgebra(e0, ops[0]), phiE,
          BimodulePair{ops[2], ops[3]}};
}

void require_valid_Z(const ExtendingDatum& D) {
  auto rep = check_crossed_module(D.Z);
  if (!rep.ok()) throw PreconditionError("Z is not a Zinbiel 2-algebra", rep);
}

ConditionReport check_datum_direct(const ExtendingDatum& D, const CheckOptions& opt) {
  require_valid_Z(D);
  return check_crossed_module(build_unified_product(D), opt);
}

ConditionReport check_datum_conditions(const ExtendingDatum& D, const CheckOptions& opt) {
  require_valid_Z(D);
  D.validate();
  return evaluate_conditions(ConditionList::Z, {&D}, opt).report;
}

ConditionReport check_trivialZ1_conditions(const ExtendingDatum& D, const CheckOptions& opt) {
  if (D.zdim(1) != 0)
    throw PreconditionError("ZZ conditions require dim Z1 = 0", ConditionReport(opt.violation_cap));
  require_valid_Z(D);
  D.validate();
  return evaluate_conditions(ConditionList::ZZ, {&D}, opt).report;
}

namespace detail {

bool direct_valid(const ExtendingDatum& D) {
  CheckOptions opt;
  opt.violation_cap = 1;
  return check_crossed_module(build_unified_product(D), opt).ok();
}

}  // namespace detail

namespace {

// Coordinates of e in the basis [iota | kappa]: (Z-part, V-part).
struct Splitter {
  std::size_t z = 0;
  LinMap B;     // [iota | kappa]
  LinMap Binv;
  Vec zpart(const Vec& e) const {
    Vec c = Binv.apply(e);
    return Vec(c.begin(), c.begin() + static_cast<long>(z));
  }
  Vec vpart(const Vec& e) const {
    Vec c = Binv.apply(e);
    return Vec(c.begin() + static_cast<long>(z), c.end());
  }
};

Splitter splitter(const ComplementSplit& s, int level, const LinMap& kappa) {
  LinMap B = hcat(s.iota(level), kappa);
  auto inv = inverse(B);
  if (!inv) throw PreconditionError("split: image(iota) and ker(p) are not complementary",
                                    ConditionReport());
  return {s.iota(level).dom_dim(), B, *inv};
}

}  // namespace

LinMap complement_basis(const ComplementSplit& s, int level) { return kernel_basis(s.p(level)); }

void validate_split(const ComplementSplit& s) {
  for (int i : {1, 0}) {
    const LinMap& io = s.iota(i);
    const LinMap& p = s.p(i);
    const std::size_t e = s.E.dim(i);
    if (io.cod_dim() != e || p.dom_dim() != e || p.cod_dim() != io.dom_dim())
      throw DimError("split level " + std::to_string(i) + ": iota/p shapes do not match E");
    if (!compose(p, io).is_identity())
      throw PreconditionError("split level " + std::to_string(i) + ": p o iota is not the identity",
                              ConditionReport());
    if (rank(io) != io.dom_dim())
      throw PreconditionError("split level " + std::to_string(i) + ": iota is not injective",
                              ConditionReport());
  }
}

ZinbielTwoAlgebra induced_subalgebra(const ComplementSplit& s) {
  validate_split(s);
  const Field& F = s.E.field();
  const std::size_t z1 = s.iota1.dom_dim(), z0 = s.iota0.dom_dim();
  std::array<BilMap, 4> ops = {BilMap::zero(F, 0, 0, 0), BilMap::zero(F, 0, 0, 0),
                               BilMap::zero(F, 0, 0, 0), BilMap::zero(F, 0, 0, 0)};
  static const char* names[] = {"level-0 product", "level-1 product", "left action", "right action"};
  for (int j = 0; j < 4; ++j) {
    const OpLevels lv = op_levels(j);
    const std::size_t za = s.iota(lv.a).dom_dim(), zb = s.iota(lv.b).dom_dim();
    BilMapBuilder b(F, za, zb, s.iota(lv.c).dom_dim());
    for (std::size_t x = 0; x < za; ++x)
      for (std::size_t y = 0; y < zb; ++y) {
        Vec r = s.E.op(j).eval(s.iota(lv.a).column(x), s.iota(lv.b).column(y));
        Vec pr = s.p(lv.c).apply(r);
        if (s.iota(lv.c).apply(pr) != r)
          throw SubalgebraError(std::string("image(iota) is not closed under the ") + names[j] +
                                " at basis pair (" + std::to_string(x + 1) + "," +
                                std::to_string(y + 1) + ")");
        b.add_image(x, y, pr);
      }
    ops[j] = b.build();
  }
  LinMap phi(F, z0, z1);
  for (std::size_t x = 0; x < z1; ++x) {
    Vec r = s.E.phi.apply(s.iota1.column(x));
    Vec pr = s.p0.apply(r);
    if (s.iota0.apply(pr) != r)
      throw SubalgebraError("phi_E does not map image(iota1) into image(iota0) at basis vector " +
                            std::to_string(x + 1));
    for (std::size_t k = 0; k < z0; ++k) phi.set(k, x, pr[k]);
  }
  return {ZinbielAlgebra(z1, ops[1]), ZinbielAlgebra(z0, ops[0]), phi, BimodulePair{ops[2], ops[3]}};
}

ExtendingDatum extract_datum(const ComplementSplit& s) {
  return extract_datum(s, complement_basis(s, 1), complement_basis(s, 0));
}

ExtendingDatum extract_datum(const ComplementSplit& s, const LinMap& kappa1, const LinMap& kappa0) {
  auto erep = check_crossed_module(s.E);
  if (!erep.ok()) throw PreconditionError("E is not a Zinbiel 2-algebra", erep);
  ZinbielTwoAlgebra Z = induced_subalgebra(s);
  const Field& F = s.E.field();
  const LinMap kappa[2] = {kappa0, kappa1};
  for (int i : {1, 0})
    if (kappa[i].cod_dim() != s.E.dim(i) || !compose(s.p(i), kappa[i]).is_zero())
      throw DimError("complement basis at level " + std::to_string(i) + " must lie in ker(p)");
  const Splitter sp[2] = {splitter(s, 0, kappa[0]), splitter(s, 1, kappa[1])};
  const std::size_t v1 = kappa[1].dom_dim(), v0 = kappa[0].dom_dim();

  LinMap d(F, v0, v1), sigma(F, Z.dim0(), v1);
  for (std::size_t u = 0; u < v1; ++u) {
    Vec img = s.E.phi.apply(kappa[1].column(u));
    Vec zp = sp[0].zpart(img), vp = sp[0].vpart(img);
    for (std::size_t k = 0; k < Z.dim0(); ++k) sigma.set(k, u, zp[k]);
    for (std::size_t k = 0; k < v0; ++k) d.set(k, u, vp[k]);
  }
  ExtendingDatum D = ExtendingDatum::trivial(Z, TwoVectorSpace(v1, v0, d));
  D.sigma = sigma;
  for (int j = 0; j < 4; ++j) {
    const OpLevels lv = op_levels(j);
    const BilMap& op = s.E.op(j);
    const LinMap& ia = s.iota(lv.a);
    const LinMap& ib = s.iota(lv.b);
    const Splitter& out = sp[lv.c];
    // One (Z-valued, V-valued) pair of maps per mixed argument pattern.
    auto fill = [&](MapKind zk, MapKind vk, const LinMap& A, const LinMap& B) {
      BilMapBuilder zb(F, A.dom_dim(), B.dom_dim(), D.zdim(lv.c));
      BilMapBuilder vb(F, A.dom_dim(), B.dom_dim(), D.vdim(lv.c));
      for (std::size_t x = 0; x < A.dom_dim(); ++x)
        for (std::size_t y = 0; y < B.dom_dim(); ++y) {
          Vec r = op.eval(A.column(x), B.column(y));
          zb.add_image(x, y, out.zpart(r));
          vb.add_image(x, y, out.vpart(r));
        }
      D.map(zk, j) = zb.build();
      D.map(vk, j) = vb.build();
    };
    fill(MapKind::HarpoonL, MapKind::TriR, ia, kappa[lv.b]);
    fill(MapKind::HarpoonR, MapKind::TriL, kappa[lv.a], ib);
    fill(MapKind::Omega, MapKind::Star, kappa[lv.a], kappa[lv.b]);
  }
  D.validate();
  return D;
}

TwoMorphism psi_of(const ComplementSplit& s) {
  return {hcat(s.iota1, complement_basis(s, 1)), hcat(s.iota0, complement_basis(s, 0))};
}

ConditionReport verify_psi(const ComplementSplit& s, const ExtendingDatum& D, const CheckOptions& opt) {
  validate_split(s);
  ConditionReport rep(opt.violation_cap);
  const TwoMorphism psi = psi_of(s);
  const ZinbielTwoAlgebra rebuilt = build_unified_product(D);
  if (psi.phi1.dom_dim() != rebuilt.dim1() || psi.phi0.dom_dim() != rebuilt.dim0())
    throw DimError("verify_psi: datum dimensions do not match the split");
  rep.merge(check_2alg_morphism(rebuilt, s.E, psi, opt));
  const Field& F = s.E.field();
  for (int i : {1, 0}) {
    const LinMap& P = psi.level(i);
    const std::size_t z = s.iota(i).dom_dim(), e = s.E.dim(i);
    auto inv = inverse(P);
    if (!inv) {
      rep.record({"PSI.INV", {static_cast<std::size_t>(i)}, {"level"}, {}, {}});
      continue;
    }
    // Stabilise: psi(x, 0) = iota(x).
    for (std::size_t x = 0; x < z; ++x)
      if (P.column(x) != s.iota(i).column(x))
        rep.record({"PSI.STAB", {static_cast<std::size_t>(i), x + 1}, {"level", "x"}, P.column(x),
                    s.iota(i).column(x)});
    // Co-stabilise: psi(0, u) lies in ker(p) = V, so the induced map on
    // E / Z = V is the identity in the complement basis.
    for (std::size_t u = z; u < e; ++u) {
      Vec pz = s.p(i).apply(P.column(u));
      if (!is_zero(pz))
        rep.record({"PSI.COSTAB", {static_cast<std::size_t>(i), u - z + 1}, {"level", "u"}, pz,
                    zeros(F, pz.size())});
    }
  }
  rep.canonicalize();
  return rep;
}

}  // namespace zinbiel
