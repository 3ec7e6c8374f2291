#include "generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace zinbiel::testing {

Scalar Rng::scalar(const Field& f) {
  if (f.is_prime()) return f.from_int(static_cast<long long>(below(f.p())));
  // Q: integers in [-3, 3], halved with probability 1/4.
  Scalar s = f.from_int(static_cast<long long>(below(7)) - 3);
  if (coin(0.25)) s = s / f.from_int(2);
  return s;
}

Scalar Rng::sparse_scalar(const Field& f, double sparsity) {
  if (coin(sparsity)) return f.zero();
  for (;;) {
    Scalar s = scalar(f);
    if (!s.is_zero()) return s;
  }
}

Vec random_vec(Rng& rng, const Field& f, std::size_t n) {
  Vec v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(rng.scalar(f));
  return v;
}

LinMap random_linmap(Rng& rng, const Field& f, std::size_t cod, std::size_t dom, double sparsity) {
  LinMap m(f, cod, dom);
  for (std::size_t r = 0; r < cod; ++r)
    for (std::size_t c = 0; c < dom; ++c)
      m.set(r, c, sparsity > 0 ? rng.sparse_scalar(f, sparsity) : rng.scalar(f));
  return m;
}

LinMap random_invertible(Rng& rng, const Field& f, std::size_t n) {
  for (;;) {
    LinMap m = random_linmap(rng, f, n, n);
    if (rank(m) == n) return m;
  }
}

BilMap random_bilmap(Rng& rng, const Field& f, std::size_t a, std::size_t b, std::size_t c,
                     double sparsity) {
  BilMapBuilder bb(f, a, b, c);
  for (std::size_t k = 0; k < c; ++k)
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = 0; j < b; ++j)
        bb.add(k, i, j, sparsity > 0 ? rng.sparse_scalar(f, sparsity) : rng.scalar(f));
  return bb.build();
}

ZinbielAlgebra example_dim2(const Field& f) {
  BilMapBuilder b(f, 2, 2, 2);
  b.add(1, 0, 0, f.one());
  return ZinbielAlgebra(2, b.build());
}

ZinbielAlgebra random_zinbiel(Rng& rng, const Field& f, std::size_t dim) {
  if (dim > 3) throw std::invalid_argument("random_zinbiel: dim <= 3");
  for (;;) {
    // e_i · e_j ∈ span{e_k : k > max(i, j)}.
    BilMapBuilder b(f, dim, dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = std::max(i, j) + 1; k < dim; ++k) b.add(k, i, j, rng.scalar(f));
    ZinbielAlgebra A(dim, b.build());
    CheckOptions one;
    one.violation_cap = 1;
    if (!check_zinbiel(A, one).ok()) continue;
    return transport(A, random_invertible(rng, f, dim));
  }
}

namespace {

// (A as a bimodule over itself with zero product, A, 0).
ZinbielTwoAlgebra regular_module(const ZinbielAlgebra& A) {
  const Field& f = A.mult.field();
  return {ZinbielAlgebra::zero(f, A.dim), A, LinMap::zero(f, A.dim, A.dim),
          BimodulePair{A.mult, A.mult}};
}

}  // namespace

ZinbielTwoAlgebra random_valid_two_algebra(Rng& rng, const Field& f, std::size_t n) {
  ZinbielTwoAlgebra T = two_vector_space_algebra(TwoVectorSpace::zero_d(f, n, n));
  switch (rng.below(4)) {
    case 0:
      T = identity_crossed_module(random_zinbiel(rng, f, n));
      break;
    case 1:
      T = two_vector_space_algebra(TwoVectorSpace(n, n, random_linmap(rng, f, n, n)));
      break;
    case 2:
      T = regular_module(random_zinbiel(rng, f, n));
      break;
    default:
      if (n >= 2) {
        ZinbielTwoAlgebra a = identity_crossed_module(random_zinbiel(rng, f, n - 1));
        ZinbielTwoAlgebra b = two_vector_space_algebra(TwoVectorSpace(1, 1, random_linmap(rng, f, 1, 1)));
        T = direct_product(a, b);
      } else {
        T = identity_crossed_module(random_zinbiel(rng, f, n));
      }
  }
  return transport(T, random_invertible(rng, f, n), random_invertible(rng, f, n));
}

namespace {

// Non-zero vectors of F^n up to scaling, first non-zero coordinate 1.
std::vector<Vec> projective_points(const Field& f, std::size_t n) {
  std::vector<Vec> out;
  std::vector<std::uint32_t> d(n, 0);
  for (;;) {
    std::size_t s = n;
    while (s > 0) {
      --s;
      if (++d[s] < f.p()) break;
      d[s] = 0;
      if (s == 0) return out;
    }
    std::size_t lead = 0;
    while (lead < n && d[lead] == 0) ++lead;
    if (lead < n && d[lead] == 1) {
      Vec v;
      for (auto x : d) v.push_back(f.from_int(x));
      out.push_back(v);
    }
  }
}

bool in_line(const Vec& r, const Vec& line) {
  // r is a multiple of line.
  std::size_t lead = 0;
  while (lead < line.size() && line[lead].is_zero()) ++lead;
  Scalar c = r[lead] / line[lead];
  return is_zero(sub(r, scale(c, line)));
}

}  // namespace

namespace {

// Line pairs (l1, l0) with l_i ⊂ E_i closed as a sub-2-algebra (or ideal).
std::vector<std::pair<Vec, Vec>> closed_lines(const ZinbielTwoAlgebra& E, SplitKind kind) {
  const Field& f = E.field();
  if (!f.is_prime()) throw std::invalid_argument("closed_lines needs a prime field");
  auto L1 = projective_points(f, E.dim1()), L0 = projective_points(f, E.dim0());
  std::vector<std::pair<Vec, Vec>> out;
  for (const Vec& l1 : L1)
    for (const Vec& l0 : L0) {
      const Vec* line[2] = {&l0, &l1};
      if (!in_line(E.phi.apply(l1), l0)) continue;
      bool closed = true;
      for (int j = 0; j < 4 && closed; ++j) {
        const OpLevels lv = op_levels(j);
        const Vec& a = *line[lv.a];
        const Vec& b = *line[lv.b];
        const Vec& c = *line[lv.c];
        if (kind == SplitKind::Subalgebra) {
          closed = in_line(E.op(j).eval(a, b), c);
          continue;
        }
        for (std::size_t e = 0; e < E.dim(lv.b) && closed; ++e)
          closed = in_line(E.op(j).eval(a, unit(f, E.dim(lv.b), e)), c);
        for (std::size_t e = 0; e < E.dim(lv.a) && closed; ++e)
          closed = in_line(E.op(j).eval(unit(f, E.dim(lv.a), e), b), c);
      }
      if (closed) out.emplace_back(l1, l0);
    }
  return out;
}

// Random basis [l | rest]; iota = l, p = first row of the inverse.
void complete_line(Rng& rng, const Vec& l, LinMap& iota, LinMap& p) {
  const Field& f = l[0].field();
  const std::size_t n = l.size();
  for (;;) {
    std::vector<Vec> cols{l};
    for (std::size_t c = 1; c < n; ++c) cols.push_back(random_vec(rng, f, n));
    auto inv = inverse(LinMap::from_columns(f, n, cols));
    if (!inv) continue;
    iota = LinMap::from_columns(f, n, {l});
    p = LinMap(f, 1, n);
    for (std::size_t c = 0; c < n; ++c) p.set(0, c, inv->at(0, c));
    return;
  }
}

}  // namespace

bool random_split(Rng& rng, const ZinbielTwoAlgebra& E, ComplementSplit& out, SplitKind kind) {
  auto ok = closed_lines(E, kind);
  if (ok.empty()) return false;
  const auto& [l1, l0] = ok[rng.below(ok.size())];
  const Field& f = E.field();
  LinMap i1(f, 0, 0), i0(f, 0, 0), p1(f, 0, 0), p0(f, 0, 0);
  complete_line(rng, l1, i1, p1);
  complete_line(rng, l0, i0, p0);
  out = ComplementSplit{E, i1, i0, p1, p0};
  return true;
}

namespace {

// Every subspace of GF(p)^n, as a matrix whose columns are a basis (reduced echelon form).
std::vector<LinMap> all_subspaces(const Field& f, std::size_t n) {
  std::vector<LinMap> out;
  for (std::size_t k = 0; k <= n; ++k) {
    // Pivot sets as increasing k-tuples.
    std::vector<std::size_t> piv(k);
    std::iota(piv.begin(), piv.end(), 0);
    while (true) {
      // Free slots: row r, column c > piv[r] that is not a pivot.
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = piv[r] + 1; c < n; ++c)
          if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.emplace_back(r, c);
      std::vector<std::uint32_t> d(free.size(), 0);
      while (true) {
        LinMap B(f, n, k);
        for (std::size_t r = 0; r < k; ++r) B.set(piv[r], r, f.one());
        for (std::size_t x = 0; x < free.size(); ++x) B.set(free[x].second, free[x].first, f.from_int(d[x]));
        out.push_back(B);
        std::size_t x = free.size();
        while (x > 0 && ++d[x - 1] == f.p()) d[--x] = 0;
        if (x == 0) break;
      }
      // Next pivot set.
      std::size_t i = k;
      while (i > 0 && piv[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++piv[i - 1];
      for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
  }
  return out;
}

bool in_span(const Vec& v, const LinMap& B) {
  return rank(hcat(B, LinMap::from_columns(B.field(), B.cod_dim(), {v}))) == B.dom_dim();
}

// (W1, W0) is closed under phi and the four operations.
bool is_sub_two_algebra(const ZinbielTwoAlgebra& E, const LinMap& W1, const LinMap& W0) {
  const LinMap* W[2] = {&W0, &W1};
  for (std::size_t c = 0; c < W1.dom_dim(); ++c)
    if (!in_span(E.phi.apply(W1.column(c)), W0)) return false;
  for (int j = 0; j < 4; ++j) {
    const OpLevels lv = op_levels(j);
    for (std::size_t a = 0; a < W[lv.a]->dom_dim(); ++a)
      for (std::size_t b = 0; b < W[lv.b]->dom_dim(); ++b)
        if (!in_span(E.op(j).eval(W[lv.a]->column(a), W[lv.b]->column(b)), *W[lv.c])) return false;
  }
  return true;
}

// A random basis of the column space of B: B times a random invertible matrix.
LinMap rebase(Rng& rng, const LinMap& B) {
  return B.dom_dim() == 0 ? B : compose(B, random_invertible(rng, B.field(), B.dom_dim()));
}

}  // namespace

bool random_factorization(Rng& rng, const ZinbielTwoAlgebra& E, FactorInclusions& out) {
  const Field& f = E.field();
  if (!f.is_prime() || E.dim1() > 3 || E.dim0() > 3)
    throw std::invalid_argument("random_factorization: prime field and dims <= 3");
  auto S1 = all_subspaces(f, E.dim1()), S0 = all_subspaces(f, E.dim0());
  std::vector<std::pair<std::size_t, std::size_t>> subs;
  for (std::size_t a = 0; a < S1.size(); ++a)
    for (std::size_t b = 0; b < S0.size(); ++b)
      if (is_sub_two_algebra(E, S1[a], S0[b])) subs.emplace_back(a, b);
  auto complementary = [&](const LinMap& X, const LinMap& Y, std::size_t n) {
    return X.dom_dim() + Y.dom_dim() == n && rank(hcat(X, Y)) == n;
  };
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 0; x < subs.size(); ++x)
    for (std::size_t y = 0; y < subs.size(); ++y) {
      const auto& [a1, a0] = subs[x];
      const auto& [b1, b0] = subs[y];
      bool zero_x = S1[a1].dom_dim() + S0[a0].dom_dim() == 0, zero_y = S1[b1].dom_dim() + S0[b0].dom_dim() == 0;
      if (!zero_x && !zero_y && complementary(S1[a1], S1[b1], E.dim1()) && complementary(S0[a0], S0[b0], E.dim0()))
        pairs.emplace_back(x, y);
    }
  if (pairs.empty()) return false;
  auto [x, y] = pairs[rng.below(pairs.size())];
  out = FactorInclusions{rebase(rng, S1[subs[x].first]), rebase(rng, S0[subs[x].second]),
                         rebase(rng, S1[subs[y].first]), rebase(rng, S0[subs[y].second])};
  return true;
}

ExtendingDatum random_datum(Rng& rng, const ZinbielTwoAlgebra& Z, const TwoVectorSpace& V,
                            double sparsity) {
  const Field& f = Z.field();
  ExtendingDatum D = ExtendingDatum::trivial(Z, V);
  for (MapKind k : kAllMapKinds)
    for (int j = 0; j < 4; ++j) {
      auto s = D.expected_shape(k, j);
      D.map(k, j) = random_bilmap(rng, f, s[0], s[1], s[2], sparsity);
    }
  D.sigma = random_linmap(rng, f, Z.dim0(), V.dim1, sparsity);
  return D;
}

ZinbielTwoAlgebra random_small_Z(Rng& rng, const Field& f, std::size_t z1, std::size_t z0) {
  if (z1 > 1 || z0 > 1) throw std::invalid_argument("random_small_Z: dims <= 1");
  return ZinbielTwoAlgebra(ZinbielAlgebra::zero(f, z1), ZinbielAlgebra::zero(f, z0),
                           random_linmap(rng, f, z0, z1), BimodulePair::zero(f, z0, z1));
}

ExtendingDatum random_datum_at(Rng& rng, const Field& f, std::size_t z1, std::size_t z0,
                               std::size_t v1, std::size_t v0, double sparsity) {
  ZinbielTwoAlgebra Z = random_small_Z(rng, f, z1, z0);
  TwoVectorSpace V(v1, v0, random_linmap(rng, f, v0, v1, sparsity));
  return random_datum(rng, Z, V, sparsity);
}

std::vector<DatumSlot> datum_slots(const ExtendingDatum& proto) {
  std::vector<DatumSlot> slots;
  for (MapKind k : kAllMapKinds)
    for (int j = 0; j < 4; ++j) {
      auto s = proto.expected_shape(k, j);
      for (std::size_t c = 0; c < s[2]; ++c)
        for (std::size_t a = 0; a < s[0]; ++a)
          for (std::size_t b = 0; b < s[1]; ++b) slots.push_back({k, j, c, a, b, false});
    }
  for (std::size_t r = 0; r < proto.sigma.cod_dim(); ++r)
    for (std::size_t c = 0; c < proto.sigma.dom_dim(); ++c)
      slots.push_back({MapKind::Omega, 0, r, c, 0, true});
  return slots;
}

ExtendingDatum datum_from_digits(const ExtendingDatum& proto, const std::vector<DatumSlot>& slots,
                                 const std::vector<std::uint32_t>& digits) {
  const Field& f = proto.field();
  ExtendingDatum D = proto;
  std::size_t idx = 0;
  for (MapKind k : kAllMapKinds)
    for (int j = 0; j < 4; ++j) {
      auto s = proto.expected_shape(k, j);
      BilMapBuilder b(f, s[0], s[1], s[2]);
      while (idx < slots.size() && !slots[idx].is_sigma && slots[idx].kind == k && slots[idx].j == j) {
        if (digits[idx]) b.add(slots[idx].k, slots[idx].i, slots[idx].jj, f.from_int(digits[idx]));
        ++idx;
      }
      D.map(k, j) = b.build();
    }
  for (; idx < slots.size(); ++idx) D.sigma.set(slots[idx].k, slots[idx].i, f.from_int(digits[idx]));
  return D;
}

ComplementSplit empty_split(const ZinbielTwoAlgebra& E) {
  const Field& f = E.field();
  return ComplementSplit{E, LinMap(f, 0, 0), LinMap(f, 0, 0), LinMap(f, 0, 0), LinMap(f, 0, 0)};
}

FactorInclusions standard_inclusions(const ExtendingDatum& D) {
  const Field& f = D.field();
  auto columns = [&](std::size_t n, std::size_t from, std::size_t count) {
    std::vector<Vec> cols;
    for (std::size_t c = 0; c < count; ++c) cols.push_back(unit(f, n, from + c));
    return LinMap::from_columns(f, n, cols);
  };
  std::size_t e1 = D.zdim(1) + D.vdim(1), e0 = D.zdim(0) + D.vdim(0);
  return {columns(e1, 0, D.zdim(1)), columns(e0, 0, D.zdim(0)), columns(e1, D.zdim(1), D.vdim(1)),
          columns(e0, D.zdim(0), D.vdim(0))};
}

}  // namespace zinbiel::testing
