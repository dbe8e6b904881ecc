#include "actmed/commitments.hpp"

#include <algorithm>

#include "actmed/errors.hpp"

namespace actmed::commit {

using ec::EffectAxiom;
using ec::Fluent;

Fluent commitment(std::string debtor, std::string creditor, Fluent p) {
    return Fluent::commitment(std::move(debtor), std::move(creditor), std::move(p));
}

Fluent conditional_commitment(std::string debtor, std::string creditor, Fluent q, Fluent p) {
    return Fluent::cond_commitment(std::move(debtor), std::move(creditor), std::move(q),
                                   std::move(p));
}

Fluent accept(std::string accepter, std::string towards, Fluent p) {
    return Fluent::accept(std::move(accepter), std::move(towards), std::move(p));
}

std::vector<EffectAxiom> sigma_c() {
    return {EffectAxiom::commit_rule(EffectAxiom::Form::CommitF1),
            EffectAxiom::commit_rule(EffectAxiom::Form::CommitF2),
            EffectAxiom::commit_rule(EffectAxiom::Form::CommitF3)};
}

void EffectRegistry::add(const std::string& act_class, EffectAxiom axiom) {
    entries_[act_class].push_back(std::move(axiom));
}

const std::vector<EffectAxiom>& EffectRegistry::effects_for(const std::string& act_class) const {
    auto it = entries_.find(act_class);
    if (it == entries_.end()) throw UnknownActClass(act_class);
    return it->second;
}

bool EffectRegistry::has(const std::string& act_class) const {
    return entries_.count(act_class) > 0;
}

std::vector<std::string> EffectRegistry::act_classes() const {
    std::vector<std::string> out;
    for (const auto& [cls, axioms] : entries_) out.push_back(cls);
    return out;
}

std::vector<EffectAxiom> EffectRegistry::all() const {
    std::vector<EffectAxiom> out;
    for (const auto& [cls, axioms] : entries_)
        out.insert(out.end(), axioms.begin(), axioms.end());
    std::sort(out.begin(), out.end(),
              [](const EffectAxiom& x, const EffectAxiom& y) { return x.label < y.label; });
    return out;
}

EffectRegistry default_registry() {
    EffectRegistry registry;
    registry.add("Inquiry",
                 ec::parse_effect_clause(
                     "Inquiry",
                     "initiates CC(receiver,sender,accept(receiver,sender,content),content)"));
    registry.add("Responsive",
                 ec::parse_effect_clause(
                     "Responsive",
                     "terminates C(sender,receiver,?RA) when holds C(sender,receiver,?RA)"));
    registry.add(
        "Responsive",
        ec::parse_effect_clause("Responsive",
                                "terminates CC(sender,receiver,accept(sender,receiver,?RA),?RA) "
                                "when holds CC(sender,receiver,accept(sender,receiver,?RA),?RA)"));
    registry.add("Responsive", ec::parse_effect_clause("Responsive", "initiates content"));
    return registry;
}

std::vector<EffectAxiom> sigma_t(const EffectRegistry& registry) { return registry.all(); }

}  // namespace actmed::commit
