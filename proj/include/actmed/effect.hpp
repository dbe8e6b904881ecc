#pragma once

#include <string>
#include <vector>

#include "actmed/fluent.hpp"

namespace actmed::ec {

enum class EffectKind { Initiates, Terminates, Releases };

std::string to_string(EffectKind kind);

/// One effect axiom. Template axioms carry an event pattern (an act class
/// plus the ?m message slot), an optional condition list gamma whose atoms
/// must hold when the event occurs (and which may bind extra variables),
/// and a fluent template over ?s/?r/?P and condition-bound variables.
/// The three commitment-dynamics schemas are marked by Form and use none of
/// the template fields.
struct EffectAxiom {
    enum class Form { Template, CommitF1, CommitF2, CommitF3 };

    Form form = Form::Template;
    std::string act_class;         // event pattern send(act_class(?m))
    std::vector<Fluent> conditions;
    EffectKind kind = EffectKind::Initiates;
    Fluent fluent;
    std::string label;

    static EffectAxiom commit_rule(Form form);
};

/// A ground Initiates/Terminates/Releases fact produced for one occurring
/// event.
struct GroundEffect {
    EventTerm event;
    EffectKind kind = EffectKind::Initiates;
    Fluent fluent;
    int time = 0;
    std::string source;  // label of the axiom that produced it

    std::string to_string() const;
};

/// Parses one registry effect clause, e.g.
///   initiates CC(receiver,sender,accept(receiver,sender,content),content)
///   terminates C(sender,receiver,?RA) when holds C(sender,receiver,?RA)
/// The role keywords read as ?r/?s/?P; `when holds` clauses become
/// conditions.
EffectAxiom parse_effect_clause(const std::string& act_class, const std::string& text);

}  // namespace actmed::ec
