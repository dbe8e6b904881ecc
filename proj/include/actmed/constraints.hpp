#pragma once

#include <string>
#include <vector>

#include "actmed/fluent.hpp"
#include "actmed/ontology.hpp"

namespace actmed::ec {

/// HoldsAt(body...,t) -> HoldsAt(head,t), all atoms at one shared timepoint.
/// Body and head are class/property fluent patterns over ?-variables.
struct StateConstraint {
    std::vector<Fluent> body;
    Fluent head;
    std::string label;  // names the originating axiom direction
};

/// Happens(send(trigger(?m)),t) -> Happens(send(implied(?m)),t).
struct EventConstraint {
    std::string trigger;
    std::string implied;
    std::string label;
};

/// The set of state and event-occurrence constraints compiled from one
/// system's TBox.
struct ConstraintSet {
    std::vector<StateConstraint> state;
    std::vector<EventConstraint> event;
    std::string system;

    void merge(const ConstraintSet& other);
    std::string to_text() const;
};

/// Compiles the TBox: each subsumption direction contributes, per top-level
/// atomic conjunct C of its right side, the state constraint B=>C and the
/// event constraint B=>C; each definition additionally contributes the
/// recognition constraint whose body unfolds the definition structurally
/// (conjuncts at the same variable, existentials via a fresh object variable).
/// Recognition heads are never primitive force classes. Output is
/// order-normalized; a pure function of the TBox.
ConstraintSet generate(const onto::Ontology& onto);

std::string to_string(const StateConstraint& constraint);
std::string to_string(const EventConstraint& constraint);

}  // namespace actmed::ec
