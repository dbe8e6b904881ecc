#include "actmed/checker.hpp"

#include <algorithm>
#include <sstream>

namespace actmed::conv {

namespace {

void append_section(std::ostringstream& out, const std::string& title,
                    const ec::Gamma& obs) {
    out << title << ":\n";
    if (obs.empty()) {
        out << "  (none)\n";
        return;
    }
    for (const auto& ob : obs) out << "  " << ob.to_string() << "\n";
}

std::set<std::string> specific_classes(const ABox& abox, const std::string& ind,
                                       const onto::Ontology* ontology) {
    std::vector<std::string> asserted = abox.classes_of(ind);
    std::set<std::string> names(asserted.begin(), asserted.end());
    if (ontology != nullptr) names = ontology->most_specific(names);
    return names;
}

}  // namespace

ec::Gamma feature_observations(const ABox& message, const std::string& root,
                               int time, const onto::Ontology* ontology) {
    ec::Gamma out;
    auto content = message.object_of(root, "hasContent");
    if (!content || content->literal) return out;
    const std::string p = content->text;
    for (const auto& name : specific_classes(message, p, ontology))
        out.insert(ec::Observation::holds(ec::Fluent::cls(name, p), time));
    for (const auto& a : message.assertions()) {
        if (a.is_class() || a.subject != p) continue;
        out.insert(
            ec::Observation::holds(ec::Fluent::prop(a.predicate, p, a.object), time));
        if (a.object.literal) continue;
        for (const auto& name : specific_classes(message, a.object.text, ontology))
            out.insert(
                ec::Observation::holds(ec::Fluent::cls(name, a.object.text), time));
    }
    return out;
}

ConversionReport check(const ConversionCase& c) {
    ConversionReport r;
    r.context = c.gamma;
    r.trace.note("check", "source: send(" + c.source.act_class + "(" +
                              c.source.root + ")) in " + c.source.system);
    r.trace.note("check", "target: send(" + c.target.act_class + "(" +
                              c.target.root + ")) in " + c.target.system);
    for (const auto& ob : c.gamma) r.trace.note("context", ob.to_string());

    auto side_phi = [&](const SystemSide& side, const std::string& label) {
        ec::Gamma g = c.gamma;
        for (const auto& ob :
             feature_observations(side.message, side.root, c.time, side.ontology)) {
            g.insert(ob);
            r.trace.note("context:" + label, ob.to_string());
        }
        ec::Narrative delta;
        delta.add(ec::make_send_event(side.act_class, side.message, side.root),
                  c.time);
        return ec::step(g, delta, side.sigma, side.psi, c.time, &r.trace);
    };
    r.phi_source = side_phi(c.source, "source");
    r.phi_target = side_phi(c.target, "target");

    r.consistent = ec::check_consistent(r.phi_target);
    if (!r.consistent) r.trace.note("check", "target effects are inconsistent");

    ec::ConstraintSet psi = c.source.psi;
    psi.merge(c.target.psi);
    auto ent = ec::entails(r.phi_target, r.phi_source, psi, &r.trace);
    r.entailed = ent.entailed;
    r.missing = ent.missing;
    r.satisfactory = r.consistent && r.entailed;
    r.trace.note("check", r.satisfactory ? "satisfactory" : "not satisfactory");
    return r;
}

std::string ConversionReport::to_text() const {
    std::ostringstream out;
    out << "verdict: " << (satisfactory ? "satisfactory" : "not satisfactory")
        << "\n";
    out << "consistent: " << (consistent ? "yes" : "no") << "\n";
    append_section(out, "context", context);
    append_section(out, "phi-source", phi_source);
    append_section(out, "phi-target", phi_target);
    append_section(out, "missing", missing);
    return out.str();
}

}  // namespace actmed::conv
