#pragma once

#include <map>
#include <string>
#include <vector>

#include "actmed/constraints.hpp"
#include "actmed/effect.hpp"
#include "actmed/fluent.hpp"

namespace actmed::ec {

/// Records every rule firing as one "[rule] fact" line.
struct Trace {
    std::vector<std::string> lines;

    void note(const std::string& rule, const std::string& fact);
    std::string to_text() const;
};

/// Variable bindings accumulated during pattern matching. Plain ids bind as
/// Named fluents.
using Bindings = std::map<std::string, Fluent>;

/// Extends `bindings` so that `pattern` equals `actual`; false on mismatch.
bool unify(const Fluent& pattern, const Fluent& actual, Bindings& bindings);

/// Instantiates a pattern; throws UnboundVariable on an unbound `?var`.
Fluent substitute(const Fluent& pattern, const Bindings& bindings);

/// Least fixpoint of the event-occurrence constraints over the narrative.
/// Nothing else happens (closed-world reading of Happens).
Narrative close_events(const Narrative& delta, const ConstraintSet& psi, Trace* trace = nullptr);

/// Grounds the effect axioms against the occurring events and the context:
/// template axioms bind ?m/?s/?r/?P from the event and any further
/// variables from their conditions (matched against positive observations
/// at the event's timepoint); the commitment schemas then saturate against
/// the commitments in the context and the effect facts produced so far.
/// No other effect facts exist (closed-world reading of the effect
/// predicates).
std::vector<GroundEffect> ground_effects(const std::vector<EffectAxiom>& sigma,
                                         const Narrative& events, const Gamma& gamma,
                                         Trace* trace = nullptr);

/// One reasoning step: closes the narrative, grounds the effects, then
/// applies initiation, termination and inertia to produce the observations
/// at t+1. Initiated fluents come to hold, terminated fluents come to not
/// hold, and unaffected held fluents persist; released fluents drop out of
/// inertia.
Gamma step(const Gamma& gamma, const Narrative& delta, const std::vector<EffectAxiom>& sigma,
           const ConstraintSet& psi, int t, Trace* trace = nullptr);

/// The timepoint a step naturally runs at: the narrative's time when events
/// exist, otherwise the latest observation time, otherwise 0.
int infer_time(const Gamma& gamma, const Narrative& delta);

/// True when no fluent is observed with both signs under one predicate at
/// one timepoint.
bool check_consistent(const Gamma& phi);

struct EntailResult {
    bool entailed = false;
    Gamma missing;
};

/// Closes the positive observations of phi2 under the state constraints
/// (per timepoint) and checks that every observation of phi1 is covered;
/// negative and ReleasedAt observations must appear in phi2 verbatim.
EntailResult entails(const Gamma& phi2, const Gamma& phi1, const ConstraintSet& psi_union,
                     Trace* trace = nullptr);

}  // namespace actmed::ec
