#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "actmed/abox.hpp"
#include "actmed/sexpr.hpp"

namespace actmed::msg {

enum class Syntax { FipaAcl, Kqml, AssertionBlock };

std::string to_string(Syntax syntax);
Syntax syntax_from(const std::string& name);

/// A concrete message as it travels between agents.
struct RawMessage {
    Syntax syntax = Syntax::FipaAcl;
    std::string text;
};

/// The intention-bearing part of a message. The message id lives here because
/// the concrete syntaxes carry it as an envelope slot (`:reply-with`, or the
/// `@message` marker of the assertion-block format).
struct Envelope {
    std::string performative;
    std::string sender;
    std::string receiver;
    std::string language;  // empty when the message names none
    std::optional<std::string> message_id;
    std::map<std::string, std::string> extra_params;  // keys keep the ':' prefix

    bool operator==(const Envelope&) const = default;
};

/// The object of the intention: an expression tree for the s-expression
/// syntaxes, or an assertion set for the assertion-block syntax.
struct Content {
    enum class Kind { Empty, Tree, Assertions };

    Kind kind = Kind::Empty;
    Sexpr tree;                       // Kind::Tree
    ABox assertions;                  // Kind::Assertions
    std::optional<std::string> root;  // content root individual, Kind::Assertions

    static Content empty();
    static Content of_tree(Sexpr tree);
    static Content of_assertions(ABox assertions, std::optional<std::string> root);

    bool operator==(const Content&) const = default;
};

struct StructuredMessage {
    Envelope envelope;
    Content content;

    const std::optional<std::string>& message_id() const { return envelope.message_id; }
    void set_message_id(std::string id) { envelope.message_id = std::move(id); }

    bool operator==(const StructuredMessage&) const = default;
};

std::pair<Envelope, Content> split(const StructuredMessage& msg);
StructuredMessage join(Envelope envelope, Content content);

}  // namespace actmed::msg
