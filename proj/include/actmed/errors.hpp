#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace actmed {

/// Base class for every error the library throws.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text. `position` is a byte offset into the input.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& expected)
        : Error("syntax error at offset " + std::to_string(position) + ": expected " + expected),
          position(position),
          expected(expected) {}

    std::size_t position;
    std::string expected;
};

/// A required envelope field (performative, sender, receiver) is absent.
class MissingField : public Error {
public:
    explicit MissingField(const std::string& name)
        : Error("missing required field: " + name), name(name) {}

    std::string name;
};

class UnsupportedSyntax : public Error {
public:
    explicit UnsupportedSyntax(const std::string& detail)
        : Error("unsupported syntax: " + detail) {}
};

/// The translator profile has no rule for a performative, parameter or
/// content construct that appears in the message.
class UnmappedConstruct : public Error {
public:
    explicit UnmappedConstruct(const std::string& name)
        : Error("no translator rule for construct: " + name), name(name) {}

    std::string name;
};

/// Zero or several message-class individuals were found where exactly one
/// message root was required.
class AmbiguousRoot : public Error {
public:
    explicit AmbiguousRoot(const std::string& detail)
        : Error("ambiguous message root: " + detail) {}
};

/// Axiom outside the supported fragment (atomic lhs; rhs from atomic names,
/// conjunction and existential restriction).
class UnsupportedAxiomShape : public Error {
public:
    UnsupportedAxiomShape(std::size_t line, const std::string& detail)
        : Error("unsupported axiom shape at line " + std::to_string(line) + ": " + detail),
          line(line) {}

    std::size_t line;
};

/// An effect-axiom variable could not be bound from the message roles or
/// the axiom conditions.
class UnboundVariable : public Error {
public:
    explicit UnboundVariable(const std::string& name)
        : Error("unbound variable in effect axiom: " + name), name(name) {}

    std::string name;
};

/// Effect-registry lookup miss.
class UnknownActClass : public Error {
public:
    explicit UnknownActClass(const std::string& name)
        : Error("no effect entry for act class: " + name), name(name) {}

    std::string name;
};

}  // namespace actmed
