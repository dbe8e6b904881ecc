#include "actmed/registry.hpp"

#include <fstream>
#include <sstream>

#include "actmed/errors.hpp"

namespace actmed::med {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> words(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

std::filesystem::path resolve(const std::filesystem::path& base,
                              const std::string& p) {
    std::filesystem::path q(p);
    return q.is_absolute() ? q : base / q;
}

struct PendingSystem {
    std::string id;
    msg::Syntax syntax = msg::Syntax::AssertionBlock;
    bool syntax_set = false;
    std::string address;
    std::vector<std::string> agents;
    std::vector<std::filesystem::path> ontologies;
    std::filesystem::path profile;
};

}  // namespace

SystemRegistry SystemRegistry::load(const std::filesystem::path& config) {
    std::ifstream in(config);
    if (!in) throw Error("cannot open registry config " + config.string());
    std::filesystem::path base =
        config.has_parent_path() ? config.parent_path() : std::filesystem::path(".");

    SystemRegistry reg;
    std::vector<std::filesystem::path> shared;
    std::vector<PendingSystem> pending;
    bool in_system = false;
    bool have_common = false;

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto fail = [&](const std::string& m) -> void {
            throw Error("registry line " + std::to_string(lineno) + ": " + m);
        };
        std::vector<std::string> w = words(t);
        const std::string& key = w[0];
        if (!in_system) {
            if (key == "common" && w.size() == 2) {
                shared.push_back(resolve(base, w[1]));
                have_common = true;
            } else if ((key == "domain" || key == "actions") && w.size() == 2) {
                shared.push_back(resolve(base, w[1]));
            } else if (key == "effects") {
                size_t colon = t.find(':');
                if (colon == std::string::npos) fail("effects line needs '<Act>: <clause>'");
                std::string act = trim(t.substr(7, colon - 7));
                std::string clause = trim(t.substr(colon + 1));
                if (act.empty() || clause.empty()) fail("effects line needs '<Act>: <clause>'");
                reg.effects_.add(act, ec::parse_effect_clause(act, clause));
            } else if (key == "transport" && w.size() == 2) {
                reg.transport_ = w[1];
            } else if (key == "check-before-dispatch" && w.size() == 2) {
                reg.check_before_dispatch_ = (w[1] == "on" || w[1] == "true");
            } else if (key == "system" && w.size() == 2) {
                pending.push_back(PendingSystem{});
                pending.back().id = w[1];
                in_system = true;
            } else {
                fail("unknown directive '" + key + "'");
            }
        } else {
            PendingSystem& cur = pending.back();
            if (key == "syntax" && w.size() == 2) {
                cur.syntax = msg::syntax_from(w[1]);
                cur.syntax_set = true;
            } else if (key == "ontology" && w.size() == 2) {
                cur.ontologies.push_back(resolve(base, w[1]));
            } else if (key == "profile" && w.size() == 2) {
                cur.profile = resolve(base, w[1]);
            } else if (key == "agent" && w.size() == 2) {
                cur.agents.push_back(w[1]);
            } else if (key == "address" && w.size() == 2) {
                cur.address = w[1];
            } else if (key == "end") {
                in_system = false;
            } else {
                fail("unknown system directive '" + key + "'");
            }
        }
    }
    if (in_system) throw Error("registry: unterminated system block");
    if (!have_common) throw Error("registry: no common ontology declared");

    onto::Ontology stack;
    for (const auto& p : shared) stack.merge(onto::load_ontology(p));
    reg.common_ = stack;

    for (PendingSystem& ps : pending) {
        SystemEntry e;
        e.id = ps.id;
        e.syntax = ps.syntax;
        e.address = ps.address.empty() ? "inproc:" + ps.id : ps.address;
        e.agents = ps.agents;
        e.ontology = stack;
        for (const auto& p : ps.ontologies) e.ontology.merge(onto::load_ontology(p));
        if (ps.profile.empty())
            throw Error("registry: system " + ps.id + " declares no profile");
        e.profile = msg::load_profile(ps.profile);
        if (ps.syntax_set && e.profile.syntax != e.syntax)
            throw Error("registry: system " + ps.id +
                        " profile syntax disagrees with declared syntax");
        if (!ps.syntax_set) e.syntax = e.profile.syntax;
        e.psi = ec::generate(e.ontology);
        e.psi.system = ps.id;
        if (reg.systems_.count(ps.id))
            throw Error("registry: duplicate system " + ps.id);
        reg.order_.push_back(ps.id);
        reg.systems_.emplace(ps.id, std::move(e));
    }
    return reg;
}

bool SystemRegistry::has_system(const std::string& id) const {
    return systems_.count(id) != 0;
}

const SystemEntry& SystemRegistry::system(const std::string& id) const {
    auto it = systems_.find(id);
    if (it == systems_.end()) throw Error("unknown system " + id);
    return it->second;
}

std::vector<std::string> SystemRegistry::system_ids() const { return order_; }

std::optional<std::string> SystemRegistry::system_of_agent(
    const std::string& agent) const {
    for (const auto& id : order_) {
        const SystemEntry& e = systems_.at(id);
        for (const auto& a : e.agents)
            if (a == agent) return id;
    }
    return std::nullopt;
}

std::vector<ec::EffectAxiom> SystemRegistry::sigma() const {
    std::vector<ec::EffectAxiom> out = commit::sigma_c();
    std::vector<ec::EffectAxiom> reg_axioms = commit::sigma_t(effects_);
    out.insert(out.end(), reg_axioms.begin(), reg_axioms.end());
    return out;
}

}  // namespace actmed::med
