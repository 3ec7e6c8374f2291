#include "zinbiel/classify.hpp"

#include <algorithm>
#include <thread>

#include <gmpxx.h>

#include "zinbiel/json_io.hpp"

namespace zinbiel {

const char* relation_name(Relation r) { return r == Relation::Equivalent ? "equivalent" : "cohomologous"; }

namespace {

void require_shape(const LinMap& m, std::size_t cod, std::size_t dom, const char* name) {
  if (m.cod_dim() != cod || m.dom_dim() != dom)
    throw DimError(std::string("rs: ") + name + " must be " + std::to_string(cod) + "x" +
                   std::to_string(dom) + ", got " + std::to_string(m.cod_dim()) + "x" +
                   std::to_string(m.dom_dim()));
}

void require_same_base(const ExtendingDatum& D, const ExtendingDatum& Dp) {
  if (!(D.Z == Dp.Z) || !(D.V == Dp.V))
    throw PreconditionError("D and D' must share Z and (V1, V0, d)", ConditionReport());
}

// [[I, r], [0, s]] with the Z block first.
LinMap block(const Field& F, std::size_t z, const LinMap& r, const LinMap& s) {
  const std::size_t v = s.dom_dim();
  LinMap m(F, z + v, z + v);
  for (std::size_t i = 0; i < z; ++i) m.set(i, i, F.one());
  for (std::size_t c = 0; c < v; ++c) {
    for (std::size_t i = 0; i < z; ++i) m.set(i, z + c, r.at(i, c));
    for (std::size_t i = 0; i < v; ++i) m.set(z + i, z + c, s.at(i, c));
  }
  return m;
}

mpz_class power(std::uint32_t p, std::size_t n) {
  mpz_class c;
  mpz_ui_pow_ui(c.get_mpz_t(), p, n);
  return c;
}

void check_budget(const mpz_class& count, std::uint64_t budget, bool infeasible, const std::string& what) {
  if (count <= mpz_class(std::to_string(budget))) return;
  std::string msg = what + ": " + count.get_str() + " candidates exceed the budget of " +
                    std::to_string(budget);
  if (infeasible) throw InfeasibleSearch(msg, count.get_str());
  throw BudgetExceeded(msg, count.get_str());
}

// Fills matrices in order from a base-p digit string.
struct MatrixSlots {
  std::vector<LinMap*> mats;
  std::size_t size() const {
    std::size_t n = 0;
    for (auto* m : mats) n += m->cod_dim() * m->dom_dim();
    return n;
  }
  void load(const std::vector<std::uint32_t>& digits, const Field& F) {
    std::size_t idx = 0;
    for (auto* m : mats)
      for (std::size_t r = 0; r < m->cod_dim(); ++r)
        for (std::size_t c = 0; c < m->dom_dim(); ++c) m->set(r, c, F.from_int(digits[idx++]));
  }
};

// Advances a base-p odometer (last digit fastest); false after the last value.
bool next_digits(std::vector<std::uint32_t>& d, std::uint32_t p) {
  for (std::size_t s = d.size(); s > 0; --s) {
    if (++d[s - 1] < p) return true;
    d[s - 1] = 0;
  }
  return false;
}

}  // namespace

TwoMorphism morphism_from_rs(const RSData& rs, const ExtendingDatum& D, const ExtendingDatum& Dp) {
  if (D.zdim(1) != Dp.zdim(1) || D.zdim(0) != Dp.zdim(0) || D.vdim(1) != Dp.vdim(1) ||
      D.vdim(0) != Dp.vdim(0))
    throw DimError("morphism_from_rs: D and D' have different dimensions");
  require_same_base(D, Dp);
  for (int i : {1, 0}) {
    const char* rn = i == 1 ? "r1" : "r0";
    const char* sn = i == 1 ? "s1" : "s0";
    require_shape(rs.r(i), D.zdim(i), D.vdim(i), rn);
    require_shape(rs.s(i), D.vdim(i), D.vdim(i), sn);
  }
  const Field& F = D.field();
  return {block(F, D.zdim(1), rs.r1, rs.s1), block(F, D.zdim(0), rs.r0, rs.s0)};
}

ConditionReport check_rs_direct(const RSData& rs, const ExtendingDatum& D, const ExtendingDatum& Dp,
                                const CheckOptions& opt) {
  TwoMorphism f = morphism_from_rs(rs, D, Dp);
  return check_2alg_morphism(build_unified_product(D), build_unified_product(Dp), f, opt);
}

ConditionReport check_rs_conditions(const RSData& rs, const ExtendingDatum& D, const ExtendingDatum& Dp,
                                    const CheckOptions& opt) {
  morphism_from_rs(rs, D, Dp);
  return evaluate_conditions(ConditionList::H, {&D, &Dp, &rs}, opt).report;
}

RSData compose_rs(const RSData& a, const RSData& b) {
  return {add(a.r1, compose(b.r1, a.s1)), add(a.r0, compose(b.r0, a.s0)), compose(b.s1, a.s1),
          compose(b.s0, a.s0)};
}

EquivalenceResult are_equivalent(const ExtendingDatum& D, const ExtendingDatum& Dp, Relation mode,
                                 const SearchOptions& opt) {
  require_same_base(D, Dp);
  require_valid_Z(D);
  for (const ExtendingDatum* x : {&D, &Dp})
    if (!detail::direct_valid(*x))
      throw PreconditionError("are_equivalent: both data must be valid", check_datum_direct(*x));
  const Field& F = D.field();
  if (!F.is_prime()) throw FieldError("are_equivalent: exhaustive search needs a prime field");
  RSData rs = RSData::identity(D);
  MatrixSlots s_slots{{&rs.s1, &rs.s0}}, r_slots{{&rs.r1, &rs.r0}};
  const std::size_t ns = mode == Relation::Equivalent ? s_slots.size() : 0;
  const std::size_t nr = r_slots.size();
  check_budget(power(F.p(), ns + nr), opt.budget, true, "rs search");

  const ZinbielTwoAlgebra E = build_unified_product(D), Ep = build_unified_product(Dp);
  CheckOptions one;
  one.violation_cap = 1;
  std::vector<std::uint32_t> sd(ns, 0);
  do {
    if (ns) {
      s_slots.load(sd, F);
      if (!inverse(rs.s1) || !inverse(rs.s0)) continue;
    }
    std::vector<std::uint32_t> rd(nr, 0);
    do {
      r_slots.load(rd, F);
      if (check_2alg_morphism(E, Ep, morphism_from_rs(rs, D, Dp), one).ok()) return {true, rs};
    } while (next_digits(rd, F.p()));
  } while (next_digits(sd, F.p()));
  return {false, std::nullopt};
}

namespace {

struct Slot {
  MapKind kind;
  int j;
  std::size_t k, i, jj;
};

struct Grid {
  ExtendingDatum proto;
  std::vector<Slot> slots;  // map entries; sigma entries follow
  std::size_t sigma_rows, sigma_cols;

  explicit Grid(ExtendingDatum p) : proto(std::move(p)) {
    for (MapKind k : kAllMapKinds)
      for (int j = 0; j < 4; ++j) {
        auto s = proto.expected_shape(k, j);
        for (std::size_t c = 0; c < s[2]; ++c)
          for (std::size_t a = 0; a < s[0]; ++a)
            for (std::size_t b = 0; b < s[1]; ++b) slots.push_back({k, j, c, a, b});
      }
    sigma_rows = proto.sigma.cod_dim();
    sigma_cols = proto.sigma.dom_dim();
  }
  std::size_t size() const { return slots.size() + sigma_rows * sigma_cols; }

  ExtendingDatum at(const std::vector<std::uint32_t>& d) const {
    const Field& F = proto.field();
    ExtendingDatum D = proto;
    std::size_t idx = 0;
    for (MapKind k : kAllMapKinds)
      for (int j = 0; j < 4; ++j) {
        auto s = proto.expected_shape(k, j);
        BilMapBuilder b(F, s[0], s[1], s[2]);
        for (; idx < slots.size() && slots[idx].kind == k && slots[idx].j == j; ++idx)
          if (d[idx]) b.add(slots[idx].k, slots[idx].i, slots[idx].jj, F.from_int(d[idx]));
        D.map(k, j) = b.build();
      }
    for (std::size_t r = 0; r < sigma_rows; ++r)
      for (std::size_t c = 0; c < sigma_cols; ++c) D.sigma.set(r, c, F.from_int(d[idx++]));
    return D;
  }
};

}  // namespace

std::size_t free_scalar_count(const ZinbielTwoAlgebra& Z, const TwoVectorSpace& V) {
  return Grid(ExtendingDatum::trivial(Z, V)).size();
}

std::vector<ExtendingDatum> enumerate_valid_data(const ZinbielTwoAlgebra& Z, const TwoVectorSpace& V,
                                                 const SearchOptions& opt) {
  const Field& F = Z.field();
  if (!F.is_prime()) throw FieldError("enumeration needs a prime field");
  if (V.d.field().p() != F.p()) throw FieldError("enumeration: d is over a different field");
  auto zrep = check_crossed_module(Z);
  if (!zrep.ok()) throw PreconditionError("Z is not a Zinbiel 2-algebra", zrep);
  const Grid grid(ExtendingDatum::trivial(Z, V));
  const std::size_t n = grid.size();
  const mpz_class total = power(F.p(), n);
  check_budget(total, opt.budget, false, "enumeration");
  const std::uint64_t count = total.get_ui();
  const std::uint64_t jobs = std::max<std::uint64_t>(1, std::min<std::uint64_t>(opt.jobs, count));

  std::vector<std::vector<ExtendingDatum>> found(jobs);
  auto work = [&](std::uint64_t w) {
    const std::uint64_t begin = count * w / jobs, end = count * (w + 1) / jobs;
    std::vector<std::uint32_t> d(n, 0);
    for (std::uint64_t x = begin, s = n; s > 0; --s) {
      d[s - 1] = static_cast<std::uint32_t>(x % F.p());
      x /= F.p();
    }
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      ExtendingDatum D = grid.at(d);
      if (detail::direct_valid(D)) found[w].push_back(std::move(D));
      next_digits(d, F.p());
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::uint64_t w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  std::vector<ExtendingDatum> out;
  for (auto& part : found)
    for (auto& D : part) out.push_back(std::move(D));
  return out;
}

OrbitPartition compute_quotients(const std::vector<ExtendingDatum>& items, Relation mode,
                                 const SearchOptions& opt) {
  OrbitPartition out;
  out.relation = mode;
  out.items = items;
  std::vector<std::string> keys;
  keys.reserve(items.size());
  for (const auto& D : items) keys.push_back(canonical_string(D));
  std::vector<std::size_t> order(items.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  // Visiting in key order makes each orbit's first member its representative.
  for (std::size_t idx : order) {
    bool placed = false;
    for (std::size_t o = 0; o < out.orbits.size() && !placed; ++o) {
      if (are_equivalent(items[out.representatives[o]], items[idx], mode, opt).related) {
        out.orbits[o].push_back(idx);
        placed = true;
      }
    }
    if (!placed) {
      out.orbits.push_back({idx});
      out.representatives.push_back(idx);
    }
  }
  for (auto& orb : out.orbits) std::sort(orb.begin(), orb.end());
  return out;
}

}  // namespace zinbiel
