#pragma once

#include "actmed/abox.hpp"
#include "actmed/ontology.hpp"

namespace actmed::onto {

/// Derived class memberships for `m` under the TBox: subsumption axioms
/// propagate memberships downward along their atomic conjuncts, and the
/// recognition direction of an equivalence classifies any individual whose
/// asserted-and-derived neighborhood satisfies the definition body.
/// Existentials never introduce individuals, property assertions are never
/// derived, and no recognition rule concludes a primitive force class.
/// The result contains only assertions absent from `m`.
ABox realize(const Ontology& onto, const ABox& m);

/// m together with everything realize() adds.
ABox saturate(const Ontology& onto, const ABox& m);

/// True when the body of the recognition rule `expr` holds of `individual`
/// given the memberships/edges in `abox`.
bool satisfies(const Ontology& onto, const ABox& abox, const std::string& individual,
               const ClassExpr& expr);

}  // namespace actmed::onto
