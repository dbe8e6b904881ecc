#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "actmed/abox.hpp"
#include "actmed/message.hpp"

namespace actmed::msg {

/// How one performative maps onto an act class, including the optional
/// content wrapper (a fresh individual standing for the answer act the
/// content describes) and fixed assertions implied by the performative.
struct PerformativeRule {
    std::string name;       // performative token; equals act_class for block syntax
    std::string act_class;  // class asserted on the message individual
    std::optional<std::string> wrap_class;  // content wrapper individual's class
    std::string wrap_prefix;                // id prefix for the wrapper
    std::string wrap_link;                  // property from wrapper to content expression
    std::vector<std::pair<std::string, Term>> asserts;  // fixed (property, object) on the root
};

/// Mapping for a content operator `(op ?x <wff>)`.
struct ConstructRule {
    std::string op;
    std::string cls;     // class of the individual standing for the expression
    std::string prefix;  // id prefix
    std::string link;    // property to the wff individual
    std::string var;     // canonical bound-variable token, e.g. ?x
};

/// Mapping for a wff predicate `(name ?x arg...)`.
struct PredicateRule {
    std::string name;
    std::string cls;
    std::string prefix;
    std::vector<std::string> arg_props;  // properties for the non-variable arguments, in order
};

/// Declarative two-way mapping between one system's concrete messages and
/// the shared vocabulary. Loaded from the system registry; pure data.
struct TranslatorProfile {
    Syntax syntax = Syntax::FipaAcl;
    std::string default_language;
    std::string actor_prefix = "Actor";
    std::vector<std::string> message_classes;
    std::set<std::string> vocab;  // class filter for emitted block content; empty keeps all
    std::vector<PerformativeRule> performatives;
    std::vector<ConstructRule> constructs;
    std::vector<PredicateRule> predicates;
    std::map<std::string, std::string> params;  // ':key' -> property

    const PerformativeRule* performative_named(const std::string& name) const;
    const PerformativeRule* performative_for_class(const std::string& cls) const;
    const ConstructRule* construct_named(const std::string& op) const;
    const ConstructRule* construct_for_class(const std::string& cls) const;
    const PredicateRule* predicate_named(const std::string& name) const;
    const PredicateRule* predicate_for_class(const std::string& cls) const;
    bool is_message_class(const std::string& cls) const;
};

TranslatorProfile parse_profile(const std::string& text);
TranslatorProfile load_profile(const std::filesystem::path& path);

}  // namespace actmed::msg
