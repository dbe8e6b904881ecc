#pragma once

#include <string>

#include "actmed/abox.hpp"
#include "actmed/constraints.hpp"
#include "actmed/effect.hpp"
#include "actmed/engine.hpp"
#include "actmed/fluent.hpp"
#include "actmed/ontology.hpp"

namespace actmed::conv {

// One side of a conversion: the act class of the message as the system sees
// it, the basic ABox of the message in that system's vocabulary, and the
// system's dynamics (sigma) and rules (psi).
struct SystemSide {
    std::string system;
    std::string act_class;
    ABox message;
    std::string root;
    std::vector<ec::EffectAxiom> sigma;
    ec::ConstraintSet psi;
    const onto::Ontology* ontology = nullptr;
};

struct ConversionCase {
    SystemSide source;
    SystemSide target;
    ec::Gamma gamma;  // shared context at `time`
    int time = 0;
};

struct ConversionReport {
    bool satisfactory = false;
    bool consistent = false;
    bool entailed = false;
    ec::Gamma context;  // the shared gamma the verdict was computed under
    ec::Gamma phi_source;
    ec::Gamma phi_target;
    ec::Gamma missing;  // source observations the target cannot account for
    ec::Trace trace;

    std::string to_text() const;
};

// Observations a system can read off its own copy of the message: the state
// of the content individual at depth one (its most specific classes, its
// outgoing properties, and the most specific classes of their targets).
ec::Gamma feature_observations(const ABox& message, const std::string& root,
                               int time, const onto::Ontology* ontology);

ConversionReport check(const ConversionCase& c);

}  // namespace actmed::conv
