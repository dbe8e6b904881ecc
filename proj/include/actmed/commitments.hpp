#pragma once

#include <map>
#include <string>
#include <vector>

#include "actmed/effect.hpp"
#include "actmed/fluent.hpp"

namespace actmed::commit {

/// C(x,y,p): x is committed towards y to bring about p.
ec::Fluent commitment(std::string debtor, std::string creditor, ec::Fluent p);

/// CC(x,y,q,p): x commits to p once the condition q is brought out.
ec::Fluent conditional_commitment(std::string debtor, std::string creditor, ec::Fluent q,
                                  ec::Fluent p);

/// accept(x,y,p): x takes on answering y regarding p.
ec::Fluent accept(std::string accepter, std::string towards, ec::Fluent p);

/// The three commitment-dynamics schemas:
///   F1 - an event caused by the debtor that initiates p terminates C(x,y,p);
///   F2 - an event caused by the creditor that initiates the condition q
///        initiates the base-level C(x,y,p) and terminates CC(x,y,q,p);
///   F3 - an event caused by the debtor that initiates p terminates
///        CC(x,y,q,p) regardless of the condition.
/// For send events the causing agent is the sender.
std::vector<ec::EffectAxiom> sigma_c();

/// Per-act-class effect templates, keyed by common-layer act class.
class EffectRegistry {
public:
    void add(const std::string& act_class, ec::EffectAxiom axiom);

    /// Throws UnknownActClass when the class has no entry.
    const std::vector<ec::EffectAxiom>& effects_for(const std::string& act_class) const;

    bool has(const std::string& act_class) const;
    std::vector<std::string> act_classes() const;

    /// All registered axioms, order-normalized.
    std::vector<ec::EffectAxiom> all() const;

private:
    std::map<std::string, std::vector<ec::EffectAxiom>> entries_;
};

/// The registry shipped for the common layer: an Inquiry commits the
/// receiver conditionally (it will bring about the content once it accepts
/// to answer), a Responsive discharges the answering commitment (base or
/// conditional) and initiates its content.
EffectRegistry default_registry();

/// Flattens the registry into the effect-axiom set Sigma_T.
std::vector<ec::EffectAxiom> sigma_t(const EffectRegistry& registry);

}  // namespace actmed::commit
