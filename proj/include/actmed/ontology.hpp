#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "actmed/force.hpp"

namespace actmed::onto {

enum class Layer { Common, Application, Domain, Action };

std::string to_string(Layer layer);
Layer layer_from(const std::string& name);

/// Right-hand-side class expression. Left-hand sides of axioms are always
/// atomic, so only the restricted EL-style shapes appear here: atomic names,
/// conjunctions of two or more conjuncts, and existential restrictions.
struct ClassExpr {
    enum class Kind { Atomic, Conjunction, Existential };

    Kind kind = Kind::Atomic;
    std::string name;                 // class name (Atomic) or property name (Existential)
    std::vector<ClassExpr> children;  // conjuncts, or the single existential filler

    static ClassExpr atomic(std::string cls);
    static ClassExpr conj(std::vector<ClassExpr> conjuncts);
    static ClassExpr some(std::string property, ClassExpr filler);

    bool operator==(const ClassExpr&) const = default;

    /// Atomic class names appearing as top-level conjuncts (the expression
    /// itself if atomic). Existential conjuncts contribute nothing here.
    std::vector<std::string> top_atomic_conjuncts() const;

    std::string to_string() const;
};

struct TBoxAxiom {
    enum class Kind { SubClassOf, EquivalentTo };

    Kind kind = Kind::SubClassOf;
    std::string lhs;  // always atomic
    ClassExpr rhs;
    Layer layer = Layer::Common;
    std::string system;  // empty for shared layers
};

/// A loaded ontology: TBox axioms tagged with their layer plus the force
/// definitions attached to act classes. Immutable once built; realization
/// never feeds anything back into the TBox.
class Ontology {
public:
    void add(TBoxAxiom axiom);
    void add_force(const std::string& act_class, ForceDescriptor descriptor);
    void merge(const Ontology& other);

    const std::vector<TBoxAxiom>& axioms() const { return axioms_; }
    const std::map<std::string, ForceDescriptor>& forces() const { return forces_; }

    std::optional<ForceDescriptor> force_of(const std::string& act_class) const;

    bool is_primitive(const std::string& cls) const;

    /// Reflexive-transitive closure over the atomic subclass edges that the
    /// subsumption direction of each axiom contributes.
    bool is_subclass_of(const std::string& sub, const std::string& super) const;

    /// All atomic superclasses of `cls`, including itself.
    std::set<std::string> superclasses_of(const std::string& cls) const;

    /// Drops every class from `classes` that has a strict subclass also in
    /// `classes`; what remains are the most specific members.
    std::set<std::string> most_specific(const std::set<std::string>& classes) const;

private:
    std::vector<TBoxAxiom> axioms_;
    std::map<std::string, ForceDescriptor> forces_;
    std::map<std::string, std::set<std::string>> up_;  // direct atomic superclass edges
};

/// Parses the ontology text format: `layer:` / `system:` pragmas, one axiom
/// per line (`A SubClassOf expr`, `A EquivalentTo expr`), and `force` lines.
/// Constructs outside the supported fragment raise UnsupportedAxiomShape.
Ontology parse_ontology(const std::string& text);
Ontology load_ontology(const std::filesystem::path& path);

}  // namespace actmed::onto
