#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zinbiel/unified.hpp"

namespace zinbiel {

// Raised instead of sampling when a search space exceeds its budget.
struct BudgetExceeded : Error {
  std::string count;  // exact number of candidates, decimal
  BudgetExceeded(const std::string& what, std::string c) : Error(what), count(std::move(c)) {}
};
struct InfeasibleSearch : BudgetExceeded {
  using BudgetExceeded::BudgetExceeded;
};

enum class Relation { Equivalent, Cohomologous };
const char* relation_name(Relation r);  // "equivalent" | "cohomologous"

struct SearchOptions {
  std::uint64_t budget = 390625;  // 5^8 candidates
  unsigned jobs = 1;
};

// phi_i(x, u) = (x + r_i(u), s_i(u)) from Z♮V to Z♮'V. Throws DimError on
// shape mismatch and PreconditionError when D and D' differ in Z or V.
TwoMorphism morphism_from_rs(const RSData& rs, const ExtendingDatum& D, const ExtendingDatum& Dp);

// Direct route: check_2alg_morphism of morphism_from_rs between the unified products.
ConditionReport check_rs_direct(const RSData& rs, const ExtendingDatum& D, const ExtendingDatum& Dp,
                                const CheckOptions& opt = {});
// The (H) list.
ConditionReport check_rs_conditions(const RSData& rs, const ExtendingDatum& D, const ExtendingDatum& Dp,
                                    const CheckOptions& opt = {});

// rs of the composite (x, u) -> (x + r(u) + r'(s(u)), s'(s(u))): first a, then b.
RSData compose_rs(const RSData& a, const RSData& b);

struct EquivalenceResult {
  bool related = false;
  std::optional<RSData> witness;  // first hit in search order
};

// Exhaustive search over rs (s fixed to the identity for Cohomologous;
// invertible s only for Equivalent). Order: s1, s0, r1, r0 entries, each
// row-major, as base-p digits with the last entry fastest. Throws
// PreconditionError unless both data are valid and share Z and V, and
// InfeasibleSearch when the rs space exceeds opt.budget.
EquivalenceResult are_equivalent(const ExtendingDatum& D, const ExtendingDatum& Dp, Relation mode,
                                 const SearchOptions& opt = {});

// Number of free scalars of a datum over (Z, V), and the candidate count p^n.
std::size_t free_scalar_count(const ZinbielTwoAlgebra& Z, const TwoVectorSpace& V);

// Valid data in lexicographic order of the coefficient list (maps in the order
// harpoon_r, harpoon_l, tri_r, tri_l, omega, star, each j = 0..3 with entries
// (k, i, j) row-major, then sigma row-major). Work is split into contiguous
// ranges over opt.jobs threads; the result does not depend on opt.jobs.
std::vector<ExtendingDatum> enumerate_valid_data(const ZinbielTwoAlgebra& Z, const TwoVectorSpace& V,
                                                 const SearchOptions& opt = {});

struct OrbitPartition {
  Relation relation = Relation::Equivalent;
  std::vector<ExtendingDatum> items;
  // Index sets into items, each ascending; orbits sorted by representative.
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<std::size_t> representatives;  // per orbit, the item with the smallest canonical_string
};

// Representatives and orbit order use canonical_string (json_io). Each item
// is compared with one member of every orbit found so far.
OrbitPartition compute_quotients(const std::vector<ExtendingDatum>& items, Relation mode,
                                 const SearchOptions& opt = {});

}  // namespace zinbiel
