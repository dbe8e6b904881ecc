#include "actmed/mediator.hpp"

#include <algorithm>

#include "actmed/errors.hpp"
#include "actmed/realize.hpp"

namespace actmed::med {

namespace {

template <typename F>
void stage(ConvertOutcome& out, const std::string& name, F&& body) {
    out.stages.push_back(name);
    out.trace.note("stage", name);
    try {
        body();
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw Error("stage " + name + ", manager state Error(" + name +
                    "): " + e.what());
    }
}

void note_derived(ConvertOutcome& out, const std::string& system, const ABox& derived) {
    for (const auto& a : derived.assertions())
        out.trace.note("realize:" + system, a.to_string());
}

}  // namespace

std::string WirePayload::body() const { return dump_assertion_block(m_sat, root); }

WirePayload source_half(const SystemRegistry& reg, const msg::RawMessage& raw,
                        const std::string& from, const std::string& to,
                        ConvertOutcome& out) {
    const SystemEntry& src = reg.system(from);
    WirePayload payload;
    payload.from = from;
    payload.to = to;

    stage(out, "Splitting", [&] {
        out.source_message = msg::parse(raw);
        if (!out.source_message.envelope.message_id)
            out.source_message.envelope.message_id = "Message01";
        out.root = *out.source_message.envelope.message_id;
        out.trace.note("split", "message " + out.root + ": " +
                                    out.source_message.envelope.performative + " " +
                                    out.source_message.envelope.sender + " -> " +
                                    out.source_message.envelope.receiver);
    });
    stage(out, "Translating", [&] {
        out.m_source = msg::to_abox(out.source_message, src.profile);
        out.trace.note("translate",
                       std::to_string(out.m_source.size()) + " assertions");
    });
    stage(out, "RealizingSource", [&] {
        ABox derived = onto::realize(src.ontology, out.m_source);
        note_derived(out, from, derived);
        out.m_sat_source = out.m_source;
        out.m_sat_source.merge(derived);
    });
    stage(out, "Materializing", [&] {
        payload.message_id = out.root;
        payload.m_sat = out.m_sat_source;
        payload.root = out.root;
        out.trace.note("wire",
                       std::to_string(payload.m_sat.size()) + " assertions");
    });
    return payload;
}

void target_half(const SystemRegistry& reg, const WirePayload& payload,
                 ConvertOutcome& out) {
    const SystemEntry& dst = reg.system(payload.to);
    stage(out, "RealizingTarget", [&] {
        ABox derived = onto::realize(dst.ontology, payload.m_sat);
        note_derived(out, payload.to, derived);
        out.m_sat_target = payload.m_sat;
        out.m_sat_target.merge(derived);
    });
    stage(out, "Emitting", [&] {
        out.target_message = msg::from_abox(out.m_sat_target, dst.profile, &dst.ontology);
        out.output = msg::serialize(out.target_message, dst.syntax);
        out.trace.note("emit", to_string(dst.syntax) + " message for " +
                                   out.target_message.envelope.receiver);
    });
}

ConvertOutcome convert(const SystemRegistry& reg, const msg::RawMessage& raw,
                       const std::string& from, const std::string& to) {
    reg.system(from);
    reg.system(to);
    ConvertOutcome out;
    WirePayload payload = source_half(reg, raw, from, to, out);
    stage(out, "Dispatching",
          [&] { out.trace.note("dispatch", payload.message_id + " " + from + " -> " + to); });
    target_half(reg, payload, out);

    std::string chain;
    for (const auto& s : out.stages) chain += (chain.empty() ? "" : ",") + s;
    out.trace.note("provenance", out.root + " via " + chain);
    return out;
}

conv::SystemSide side_for(const SystemRegistry& reg, const std::string& system_id,
                          const msg::StructuredMessage& m) {
    const SystemEntry& entry = reg.system(system_id);
    const msg::PerformativeRule* rule =
        entry.profile.performative_named(m.envelope.performative);
    if (!rule) throw UnknownActClass(m.envelope.performative);
    conv::SystemSide side;
    side.system = system_id;
    side.act_class = rule->act_class;
    side.message = msg::to_abox(m, entry.profile);
    side.root = m.envelope.message_id.value_or("Message01");
    side.sigma = reg.sigma();
    side.psi = entry.psi;
    side.ontology = &entry.ontology;
    return side;
}

CheckOutcome convert_and_check(const SystemRegistry& reg, const msg::RawMessage& raw,
                               const std::string& from, const std::string& to,
                               const ec::Gamma& gamma) {
    CheckOutcome out;
    out.conversion = convert(reg, raw, from, to);
    conv::ConversionCase c;
    c.source = side_for(reg, from, out.conversion.source_message);
    c.target = side_for(reg, to, out.conversion.target_message);
    c.gamma = gamma;
    c.time = 0;
    if (!gamma.empty()) {
        c.time = gamma.begin()->time;
        for (const auto& ob : gamma) c.time = std::min(c.time, ob.time);
    }
    out.report = conv::check(c);
    return out;
}

}  // namespace actmed::med
