#pragma once

#include <string>
#include <vector>

#include "actmed/checker.hpp"
#include "actmed/codec.hpp"
#include "actmed/registry.hpp"

namespace actmed::med {

// The pipeline halves a manager runs. The wire payload between them is the
// materialized saturated assertion set in assertion-block format.
struct WirePayload {
    std::string message_id;
    std::string from;
    std::string to;
    ABox m_sat;
    std::string root;

    std::string body() const;  // assertion-block text
};

struct ConvertOutcome {
    msg::RawMessage output;
    msg::StructuredMessage source_message;
    msg::StructuredMessage target_message;
    ABox m_source;      // basic translation of the source message
    ABox m_sat_source;  // after realization under the source stack
    ABox m_sat_target;  // after realization under the target stack
    std::string root;
    std::vector<std::string> stages;  // provenance, in pipeline order
    ec::Trace trace;
};

// split -> to_abox -> saturate (source stack) -> materialize -> saturate
// (target stack) -> from_abox -> serialize. Stage failures rethrow with the
// stage name and the manager state the failure leaves behind.
ConvertOutcome convert(const SystemRegistry& reg, const msg::RawMessage& raw,
                       const std::string& from, const std::string& to);

// The two halves convert() composes; the harness runs them on opposite sides
// of a transport.
WirePayload source_half(const SystemRegistry& reg, const msg::RawMessage& raw,
                        const std::string& from, const std::string& to,
                        ConvertOutcome& out);
void target_half(const SystemRegistry& reg, const WirePayload& payload,
                 ConvertOutcome& out);

struct CheckOutcome {
    ConvertOutcome conversion;
    conv::ConversionReport report;
};

// convert() plus a Definition-3 style verdict on the (source act, target act)
// pair under the shared context `gamma`.
CheckOutcome convert_and_check(const SystemRegistry& reg, const msg::RawMessage& raw,
                               const std::string& from, const std::string& to,
                               const ec::Gamma& gamma);

// Builds one side of a conversion case out of a system's view of a message.
conv::SystemSide side_for(const SystemRegistry& reg, const std::string& system_id,
                          const msg::StructuredMessage& m);

}  // namespace actmed::med
