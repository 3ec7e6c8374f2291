#include "zinbiel/core.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

namespace zinbiel {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DimError(what);
}

void require_shape(const BilMap& m, std::size_t a, std::size_t b, std::size_t c,
                   const std::string& name) {
  require(m.dimA() == a && m.dimB() == b && m.dimC() == c,
          name + ": expected shape " + std::to_string(a) + "x" + std::to_string(b) + "->" +
              std::to_string(c) + ", got " + std::to_string(m.dimA()) + "x" +
              std::to_string(m.dimB()) + "->" + std::to_string(m.dimC()));
}

void check_eq(ConditionReport& rep, const char* id, std::vector<std::size_t> w, const Vec& lhs,
              const Vec& rhs) {
  if (lhs == rhs) return;
  for (auto& i : w) ++i;
  rep.record({id, std::move(w), {}, lhs, rhs});
}

}  // namespace

ZinbielAlgebra::ZinbielAlgebra(std::size_t n, BilMap m) : dim(n), mult(std::move(m)) {
  require_shape(mult, n, n, n, "algebra multiplication");
}

ZinbielTwoAlgebra::ZinbielTwoAlgebra(ZinbielAlgebra z1, ZinbielAlgebra z0, LinMap ph, BimodulePair a)
    : Z1(std::move(z1)), Z0(std::move(z0)), phi(std::move(ph)), act(std::move(a)) {
  require(phi.dom_dim() == Z1.dim && phi.cod_dim() == Z0.dim,
          "phi must be " + std::to_string(Z0.dim) + "x" + std::to_string(Z1.dim));
  require_shape(act.left, Z0.dim, Z1.dim, Z1.dim, "left action");
  require_shape(act.right, Z1.dim, Z0.dim, Z1.dim, "right action");
}

const BilMap& ZinbielTwoAlgebra::op(int j) const {
  switch (j) {
    case 0: return Z0.mult;
    case 1: return Z1.mult;
    case 2: return act.left;
    case 3: return act.right;
  }
  throw DimError("operation index out of range");
}

OpLevels op_levels(int j) {
  static constexpr OpLevels table[4] = {{0, 0, 0}, {1, 1, 1}, {0, 1, 1}, {1, 0, 1}};
  return table[j];
}

int op_index(int a, int b) {
  if (a == 0 && b == 0) return 0;
  if (a == 1 && b == 1) return 1;
  return a == 0 ? 2 : 3;
}

bool id_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    bool da = std::isdigit(static_cast<unsigned char>(a[i]));
    bool db = std::isdigit(static_cast<unsigned char>(b[j]));
    if (da && db) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      auto na = std::stoull(a.substr(i, ie - i)), nb = std::stoull(b.substr(j, je - j));
      if (na != nb) return na < nb;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

void ConditionReport::record(Violation v) {
  ++total_;
  if (violations_.size() < cap_) violations_.push_back(std::move(v));
}

void ConditionReport::note(Note n) { notes_.push_back(std::move(n)); }

void ConditionReport::canonicalize() {
  std::stable_sort(violations_.begin(), violations_.end(), [](const Violation& x, const Violation& y) {
    if (x.id != y.id) return id_less(x.id, y.id);
    return x.witness < y.witness;
  });
  std::stable_sort(notes_.begin(), notes_.end(), [](const Note& x, const Note& y) {
    if (x.id != y.id) return id_less(x.id, y.id);
    return x.detail < y.detail;
  });
}

void ConditionReport::merge(const ConditionReport& other) { merge_prefixed(other, ""); }

void ConditionReport::merge_prefixed(const ConditionReport& other, const std::string& prefix) {
  total_ += other.total_;
  conforming_ = conforming_ && other.conforming_;
  for (const auto& v : other.violations_) {
    Violation c = v;
    c.id = prefix + c.id;
    violations_.push_back(std::move(c));
  }
  for (const auto& n : other.notes_) notes_.push_back({prefix + n.id, n.kind, n.detail});
  canonicalize();
  if (violations_.size() > cap_) violations_.resize(cap_);
}

bool ConditionReport::has_violation(const std::string& id) const {
  return std::any_of(violations_.begin(), violations_.end(),
                     [&](const Violation& v) { return v.id == id; });
}

ConditionReport check_zinbiel(const ZinbielAlgebra& A, const CheckOptions& opt) {
  ConditionReport rep(opt.violation_cap);
  const auto& m = A.mult;
  const std::size_t n = A.dim;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec ij = m.eval_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vec ek = unit(m.field(), n, k), ei = unit(m.field(), n, i);
        Vec lhs = m.eval(ij, ek);
        Vec rhs = m.eval(ei, add(m.eval_basis(j, k), m.eval_basis(k, j)));
        check_eq(rep, "ZIN", {i, j, k}, lhs, rhs);
      }
    }
  rep.set_conforming(m.field().conforming());
  return rep;
}

namespace {

// Axioms B1-B3 for the action of Z on a space of dimension dimV.
void bimodule_axioms(ConditionReport& rep, const BilMap& mult, std::size_t nz, std::size_t nv,
                     const BimodulePair& act) {
  const Field& f = mult.field();
  const auto& L = act.left;
  const auto& R = act.right;
  for (std::size_t x = 0; x < nz; ++x)
    for (std::size_t y = 0; y < nz; ++y)
      for (std::size_t v = 0; v < nv; ++v) {
        Vec ex = unit(f, nz, x), ey = unit(f, nz, y), ev = unit(f, nv, v);
        // (x·y)⊳v = x⊳(y⊳v + v⊲y)
        check_eq(rep, "B1", {x, y, v}, L.eval(mult.eval_basis(x, y), ev),
                 L.eval(ex, add(L.eval_basis(y, v), R.eval_basis(v, y))));
        // (v⊲x)⊲y = v⊲(x·y + y·x)
        check_eq(rep, "B2", {v, x, y}, R.eval(R.eval_basis(v, x), ey),
                 R.eval(ev, add(mult.eval_basis(x, y), mult.eval_basis(y, x))));
        // (x⊳v)⊲y = x⊳(v⊲y + y⊳v)
        check_eq(rep, "B3", {x, v, y}, R.eval(L.eval_basis(x, v), ey),
                 L.eval(ex, add(R.eval_basis(v, y), L.eval_basis(y, v))));
      }
}

}  // namespace

ConditionReport check_bimodule(const ZinbielAlgebra& Z, std::size_t dimV, const BimodulePair& act,
                               const CheckOptions& opt) {
  require_shape(act.left, Z.dim, dimV, dimV, "left action");
  require_shape(act.right, dimV, Z.dim, dimV, "right action");
  ConditionReport rep(opt.violation_cap);
  rep.merge_prefixed(check_zinbiel(Z, opt), "PRE.");
  bimodule_axioms(rep, Z.mult, Z.dim, dimV, act);
  rep.canonicalize();
  return rep;
}

ZinbielAlgebra semidirect_product(const ZinbielAlgebra& Z, std::size_t dimV, const BimodulePair& act) {
  auto rep = check_bimodule(Z, dimV, act);
  if (!rep.ok()) throw PreconditionError("semidirect_product: not a bimodule", rep);
  const Field& f = Z.mult.field();
  const std::size_t n = Z.dim + dimV;
  BilMapBuilder b(f, n, n, n);
  for (const auto& e : Z.mult.entries()) b.add(e.k, e.i, e.j, e.v);
  for (const auto& e : act.left.entries()) b.add(Z.dim + e.k, e.i, Z.dim + e.j, e.v);
  for (const auto& e : act.right.entries()) b.add(Z.dim + e.k, Z.dim + e.i, e.j, e.v);
  return {n, b.build()};
}

ConditionReport check_action(const ZinbielAlgebra& Z0, const ZinbielAlgebra& Z1,
                             const BimodulePair& act, const CheckOptions& opt) {
  require_shape(act.left, Z0.dim, Z1.dim, Z1.dim, "left action");
  require_shape(act.right, Z1.dim, Z0.dim, Z1.dim, "right action");
  // Zinbiel identity of each level, namespaced ZIN0 and ZIN1.
  ConditionReport r0 = check_zinbiel(Z0, opt), r1 = check_zinbiel(Z1, opt);
  ConditionReport rep(opt.violation_cap);
  for (auto* pr : {&r0, &r1}) {
    ConditionReport tmp(opt.violation_cap);
    for (auto v : pr->violations()) {
      v.id += (pr == &r0 ? "0" : "1");
      tmp.record(std::move(v));
    }
    tmp.set_conforming(pr->conforming_field());
    rep.merge(tmp);
  }
  bimodule_axioms(rep, Z0.mult, Z0.dim, Z1.dim, act);
  const Field& f = Z0.mult.field();
  const auto& L = act.left;
  const auto& R = act.right;
  const auto& m1 = Z1.mult;
  for (std::size_t x0 = 0; x0 < Z0.dim; ++x0)
    for (std::size_t x1 = 0; x1 < Z1.dim; ++x1)
      for (std::size_t y1 = 0; y1 < Z1.dim; ++y1) {
        Vec e0 = unit(f, Z0.dim, x0), ex = unit(f, Z1.dim, x1), ey = unit(f, Z1.dim, y1);
        // (x0⊳x1)·y1 = x0⊳(x1·y1 + y1·x1)
        check_eq(rep, "A1", {x0, x1, y1}, m1.eval(L.eval_basis(x0, x1), ey),
                 L.eval(e0, add(m1.eval_basis(x1, y1), m1.eval_basis(y1, x1))));
        // (x1⊲x0)·y1 = x1·(x0⊳y1 + y1⊲x0)
        check_eq(rep, "A2", {x1, x0, y1}, m1.eval(R.eval_basis(x1, x0), ey),
                 m1.eval(ex, add(L.eval_basis(x0, y1), R.eval_basis(y1, x0))));
        // (x1·y1)⊲x0 = x1·(y1⊲x0 + x0⊳y1)
        check_eq(rep, "A3", {x1, y1, x0}, R.eval(m1.eval_basis(x1, y1), e0),
                 m1.eval(ex, add(R.eval_basis(y1, x0), L.eval_basis(x0, y1))));
      }
  rep.canonicalize();
  return rep;
}

ConditionReport check_crossed_module(const ZinbielTwoAlgebra& T, const CheckOptions& opt) {
  ConditionReport rep = check_action(T.Z0, T.Z1, T.act, opt);
  const Field& f = T.field();
  const auto& L = T.act.left;
  const auto& R = T.act.right;
  const auto& m0 = T.Z0.mult;
  const auto& m1 = T.Z1.mult;
  const auto& phi = T.phi;
  for (std::size_t x0 = 0; x0 < T.Z0.dim; ++x0)
    for (std::size_t x1 = 0; x1 < T.Z1.dim; ++x1) {
      Vec e0 = unit(f, T.Z0.dim, x0);
      Vec px1 = phi.column(x1);
      // φ(x0⊳x1) = x0·φ(x1)
      check_eq(rep, "CM1", {x0, x1}, phi.apply(L.eval_basis(x0, x1)), m0.eval(e0, px1));
      // φ(x1⊲x0) = φ(x1)·x0
      check_eq(rep, "CM2", {x1, x0}, phi.apply(R.eval_basis(x1, x0)), m0.eval(px1, e0));
    }
  for (std::size_t x1 = 0; x1 < T.Z1.dim; ++x1)
    for (std::size_t y1 = 0; y1 < T.Z1.dim; ++y1) {
      Vec ex = unit(f, T.Z1.dim, x1), ey = unit(f, T.Z1.dim, y1);
      Vec xy = m1.eval_basis(x1, y1);
      // φ(x1)⊳y1 = x1·y1 = x1⊲φ(y1)
      check_eq(rep, "CM3", {x1, y1}, L.eval(phi.column(x1), ey), xy);
      check_eq(rep, "CM4", {x1, y1}, xy, R.eval(ex, phi.column(y1)));
      // φ(x1·y1) = φ(x1)·φ(y1)
      check_eq(rep, "CM5", {x1, y1}, phi.apply(xy), m0.eval(phi.column(x1), phi.column(y1)));
    }
  rep.canonicalize();
  return rep;
}

ConditionReport check_2alg_morphism(const ZinbielTwoAlgebra& T, const ZinbielTwoAlgebra& Tp,
                                    const TwoMorphism& f, const CheckOptions& opt) {
  require(f.phi1.dom_dim() == T.dim1() && f.phi1.cod_dim() == Tp.dim1(),
          "morphism: phi1 shape mismatch");
  require(f.phi0.dom_dim() == T.dim0() && f.phi0.cod_dim() == Tp.dim0(),
          "morphism: phi0 shape mismatch");
  ConditionReport rep(opt.violation_cap);
  const Field& F = T.field();
  // M1, M2: levelwise homomorphisms.
  for (int lvl : {1, 0}) {
    const char* id = lvl == 1 ? "M1" : "M2";
    const auto& m = T.op(lvl);
    const auto& mp = Tp.op(lvl);
    const auto& g = f.level(lvl);
    for (std::size_t x = 0; x < T.dim(lvl); ++x)
      for (std::size_t y = 0; y < T.dim(lvl); ++y)
        check_eq(rep, id, {x, y}, g.apply(m.eval_basis(x, y)), mp.eval(g.column(x), g.column(y)));
  }
  // M3: φ'∘φ1 = φ0∘φ.
  for (std::size_t x = 0; x < T.dim1(); ++x)
    check_eq(rep, "M3", {x}, Tp.phi.apply(f.phi1.column(x)), f.phi0.apply(T.phi.column(x)));
  for (std::size_t x0 = 0; x0 < T.dim0(); ++x0)
    for (std::size_t x1 = 0; x1 < T.dim1(); ++x1) {
      // M4: φ1(x0⊳x1) = φ0(x0)⊳'φ1(x1); M5: φ1(x1⊲x0) = φ1(x1)⊲'φ0(x0).
      check_eq(rep, "M4", {x0, x1}, f.phi1.apply(T.act.left.eval_basis(x0, x1)),
               Tp.act.left.eval(f.phi0.column(x0), f.phi1.column(x1)));
      check_eq(rep, "M5", {x1, x0}, f.phi1.apply(T.act.right.eval_basis(x1, x0)),
               Tp.act.right.eval(f.phi1.column(x1), f.phi0.column(x0)));
    }
  rep.set_conforming(F.conforming());
  rep.canonicalize();
  return rep;
}

ZinbielTwoAlgebra zero_over(const ZinbielAlgebra& A) {
  const Field& f = A.mult.field();
  return {ZinbielAlgebra::zero(f, 0), A, LinMap::zero(f, A.dim, 0), BimodulePair::zero(f, A.dim, 0)};
}

ZinbielTwoAlgebra identity_crossed_module(const ZinbielAlgebra& A) {
  const Field& f = A.mult.field();
  return {A, A, LinMap::identity(f, A.dim), BimodulePair{A.mult, A.mult}};
}

ZinbielTwoAlgebra two_vector_space_algebra(const TwoVectorSpace& V) {
  const Field& f = V.d.field();
  return {ZinbielAlgebra::zero(f, V.dim1), ZinbielAlgebra::zero(f, V.dim0), V.d,
          BimodulePair::zero(f, V.dim0, V.dim1)};
}

namespace {

BilMap block_sum(const BilMap& a, const BilMap& b) {
  BilMapBuilder bb(a.field(), a.dimA() + b.dimA(), a.dimB() + b.dimB(), a.dimC() + b.dimC());
  for (const auto& e : a.entries()) bb.add(e.k, e.i, e.j, e.v);
  for (const auto& e : b.entries()) bb.add(a.dimC() + e.k, a.dimA() + e.i, a.dimB() + e.j, e.v);
  return bb.build();
}

}  // namespace

ZinbielTwoAlgebra direct_product(const ZinbielTwoAlgebra& A, const ZinbielTwoAlgebra& B) {
  return {ZinbielAlgebra(A.dim1() + B.dim1(), block_sum(A.Z1.mult, B.Z1.mult)),
          ZinbielAlgebra(A.dim0() + B.dim0(), block_sum(A.Z0.mult, B.Z0.mult)),
          direct_sum(A.phi, B.phi),
          BimodulePair{block_sum(A.act.left, B.act.left), block_sum(A.act.right, B.act.right)}};
}

ZinbielAlgebra transport(const ZinbielAlgebra& A, const LinMap& g) {
  auto gi = inverse(g);
  if (!gi) throw DimError("transport: map is not invertible");
  return {A.dim, transform(A.mult, g, *gi, *gi)};
}

ZinbielTwoAlgebra transport(const ZinbielTwoAlgebra& T, const LinMap& g1, const LinMap& g0) {
  auto i1 = inverse(g1), i0 = inverse(g0);
  if (!i1 || !i0) throw DimError("transport: map is not invertible");
  return {ZinbielAlgebra(T.dim1(), transform(T.Z1.mult, g1, *i1, *i1)),
          ZinbielAlgebra(T.dim0(), transform(T.Z0.mult, g0, *i0, *i0)),
          compose(g0, compose(T.phi, *i1)),
          BimodulePair{transform(T.act.left, g1, *i0, *i1), transform(T.act.right, g1, *i1, *i0)}};
}

bool is_isomorphism(const TwoMorphism& f) {
  return inverse(f.phi1).has_value() && inverse(f.phi0).has_value();
}

}  // namespace zinbiel
