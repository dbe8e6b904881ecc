#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace actmed {

/// Object position of a property assertion: a named individual or a literal.
struct Term {
    std::string text;
    bool literal = false;

    static Term individual(std::string t) { return Term{std::move(t), false}; }
    static Term lit(std::string t) { return Term{std::move(t), true}; }

    auto operator<=>(const Term&) const = default;

    /// Literals render single-quoted, individuals bare.
    std::string to_string() const;
};

/// A basic assertional axiom: C(x) or R(x,y).
struct Assertion {
    enum class Kind { Class, Property };

    Kind kind = Kind::Class;
    std::string predicate;  // class name or property name
    std::string subject;    // individual
    Term object;            // Property only

    static Assertion cls(std::string class_name, std::string individual);
    static Assertion prop(std::string property, std::string subject, Term object);

    bool is_class() const { return kind == Kind::Class; }

    auto operator<=>(const Assertion&) const = default;

    /// `subject rdf:type Class` / `subject property object` triple text.
    std::string to_string() const;
};

/// A set of basic assertions (set semantics, no duplicates).
class ABox {
public:
    ABox() = default;
    explicit ABox(std::set<Assertion> assertions) : assertions_(std::move(assertions)) {}

    const std::set<Assertion>& assertions() const { return assertions_; }
    bool empty() const { return assertions_.empty(); }
    std::size_t size() const { return assertions_.size(); }
    bool contains(const Assertion& a) const { return assertions_.count(a) > 0; }

    /// Returns true when the assertion was new.
    bool insert(Assertion a) { return assertions_.insert(std::move(a)).second; }
    void merge(const ABox& other);

    bool operator==(const ABox& other) const = default;

    /// Asserted class names of an individual.
    std::vector<std::string> classes_of(const std::string& individual) const;
    /// All individuals mentioned in subject or (non-literal) object position.
    std::set<std::string> individuals() const;
    /// Objects of `property` assertions with the given subject.
    std::vector<Term> objects_of(const std::string& subject, const std::string& property) const;
    /// First object of `property` on `subject`, if any.
    std::optional<Term> object_of(const std::string& subject, const std::string& property) const;

private:
    std::set<Assertion> assertions_;
};

/// A parsed assertion-block document: `@prefix` declarations, an optional
/// `@message` root marker and one triple per line.
struct AssertionBlockDoc {
    std::map<std::string, std::string> prefixes;
    std::optional<std::string> message_id;
    ABox abox;
};

/// Parses the line-oriented triple format: tokens whitespace-separated,
/// `#` comments, literals single-quoted, `@prefix <name> <iri>` headers,
/// optional `@message <id>`. `rdf:type` in predicate position makes a class
/// assertion. A prefixed token `p:name` requires `p` to be declared.
AssertionBlockDoc parse_assertion_block(const std::string& text);

/// Expands `prefix:name` against a declaration map; names without a declared
/// prefix are returned unchanged.
std::string expand_prefixed(const std::map<std::string, std::string>& prefixes,
                            const std::string& token);

/// One triple per line, sorted; includes the standard `@prefix rdf` header
/// and, when given, the `@message` marker.
std::string dump_assertion_block(const ABox& abox,
                                 const std::optional<std::string>& message_id = std::nullopt);

}  // namespace actmed
