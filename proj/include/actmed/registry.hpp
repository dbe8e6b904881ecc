#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "actmed/commitments.hpp"
#include "actmed/constraints.hpp"
#include "actmed/effect.hpp"
#include "actmed/message.hpp"
#include "actmed/ontology.hpp"
#include "actmed/profile.hpp"

namespace actmed::med {

// One participating system: its syntax, its ontology stack (shared common and
// domain layers merged with its own application layer), its translator
// profile, and the agents it hosts.
struct SystemEntry {
    std::string id;
    msg::Syntax syntax = msg::Syntax::AssertionBlock;
    std::string address;  // manager inbox; defaults to inproc:<id>
    std::vector<std::string> agents;
    onto::Ontology ontology;
    msg::TranslatorProfile profile;
    ec::ConstraintSet psi;
};

// Loaded from a single structured text config; all paths are taken relative
// to the config file's directory.
class SystemRegistry {
public:
    static SystemRegistry load(const std::filesystem::path& config);

    bool has_system(const std::string& id) const;
    const SystemEntry& system(const std::string& id) const;
    std::vector<std::string> system_ids() const;  // config order
    std::optional<std::string> system_of_agent(const std::string& agent) const;

    const onto::Ontology& common() const { return common_; }
    const commit::EffectRegistry& effects() const { return effects_; }
    std::vector<ec::EffectAxiom> sigma() const;  // commitment schemas + registry entries

    const std::string& transport() const { return transport_; }
    bool check_before_dispatch() const { return check_before_dispatch_; }

private:
    onto::Ontology common_;
    commit::EffectRegistry effects_;
    std::map<std::string, SystemEntry> systems_;
    std::vector<std::string> order_;
    std::string transport_ = "inproc";
    bool check_before_dispatch_ = false;
};

}  // namespace actmed::med
