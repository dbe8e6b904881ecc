#pragma once

#include "actmed/abox.hpp"
#include "actmed/message.hpp"
#include "actmed/ontology.hpp"
#include "actmed/profile.hpp"

namespace actmed::msg {

/// Parses a raw message under the grammar its syntax tag names.
/// SyntaxError carries a position; MissingField reports absent envelope slots.
StructuredMessage parse(const RawMessage& raw);

/// Renders a structured message; parse(serialize(m, s)) is structurally
/// equal to m for every supported syntax.
RawMessage serialize(const StructuredMessage& msg, Syntax syntax);

/// Translates a structured message into basic assertions (the set a
/// realization step starts from). Fresh individuals take their ids from the
/// profile's prefixes with two-digit counters.
ABox to_abox(const StructuredMessage& msg, const TranslatorProfile& profile);

/// Inverse direction: reads the message rooted at the unique individual
/// typed by one of the profile's message classes out of an assertion set.
/// The ontology, when given, picks the most specific act class for the root.
StructuredMessage from_abox(const ABox& abox, const TranslatorProfile& profile,
                            const onto::Ontology* ontology = nullptr);

}  // namespace actmed::msg
