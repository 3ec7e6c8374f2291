#pragma once

#include "zinbiel/conditions.hpp"
#include "zinbiel/datum.hpp"

namespace zinbiel {

struct SubalgebraError : Error {
  using Error::Error;
};

// The candidate 2-algebra on (Z1 ⊕ V1, Z0 ⊕ V0); Z coordinates come first.
// No validity check is performed.
ZinbielTwoAlgebra build_unified_product(const ExtendingDatum& D);

// Oracle: check_crossed_module of the unified product. Throws
// PreconditionError when Z itself is not a Zinbiel 2-algebra.
ConditionReport check_datum_direct(const ExtendingDatum& D, const CheckOptions& opt = {});

// The Z-list conditions. Suspect transcriptions appear as notes, see
// evaluate_conditions for the full outcome.
ConditionReport check_datum_conditions(const ExtendingDatum& D, const CheckOptions& opt = {});

// The ZZ-list conditions; PreconditionError unless dim Z1 = 0.
ConditionReport check_trivialZ1_conditions(const ExtendingDatum& D, const CheckOptions& opt = {});

// Throws PreconditionError (with report) when Z fails check_crossed_module.
void require_valid_Z(const ExtendingDatum& D);

// Throws DimError / PreconditionError when the split invariants fail.
void validate_split(const ComplementSplit& s);
// Z as the sub-2-algebra image(iota) with the restricted structure; throws
// SubalgebraError when image(iota) is not closed under E.
ZinbielTwoAlgebra induced_subalgebra(const ComplementSplit& s);
// Basis of V_i = ker(p_i), as columns.
LinMap complement_basis(const ComplementSplit& s, int level);

// Uniform projection: the Z-part of each product is p(result), the V-part the remainder.
ExtendingDatum extract_datum(const ComplementSplit& s);
// Same, with V_i spanned by the given columns of ker(p_i) instead of the kernel basis.
ExtendingDatum extract_datum(const ComplementSplit& s, const LinMap& kappa1, const LinMap& kappa0);

// psi_i(x, u) = iota_i(x) + kappa_i(u) where kappa_i is the complement basis.
TwoMorphism psi_of(const ComplementSplit& s);

// Empty iff psi is an isomorphism Z♮V -> E that fixes Z and induces the identity on V.
ConditionReport verify_psi(const ComplementSplit& s, const ExtendingDatum& D,
                           const CheckOptions& opt = {});

namespace detail {
// check_datum_direct without the Z precondition; for enumeration loops that
// have already validated Z.
bool direct_valid(const ExtendingDatum& D);
}  // namespace detail

}  // namespace zinbiel
