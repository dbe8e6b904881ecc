#pragma once

#include <set>
#include <string>
#include <vector>

namespace actmed::onto {

/// The five primitive illocutionary forces.
enum class ForcePrimitive { Assertive, Commissive, Directive, Declarative, Expressive };

std::string to_string(ForcePrimitive p);
ForcePrimitive force_primitive_from(const std::string& name);

/// Canonical description of an illocutionary force: a primitive plus the
/// accumulated results of the derivation operations. Condition sets carry
/// opaque labels only; the order the operations were applied in is not part
/// of the descriptor.
struct ForceDescriptor {
    ForcePrimitive base = ForcePrimitive::Assertive;
    std::set<std::string> mode_of_achievement;
    int degree_of_strength = 0;
    std::set<std::string> content_conditions;
    std::set<std::string> preparatory_conditions;
    std::set<std::string> sincerity_conditions;

    bool operator==(const ForceDescriptor&) const = default;
};

struct ForceOp {
    enum class Kind {
        AddContentCondition,
        AddPreparatory,
        AddSincerity,
        RestrictMode,
        Strengthen,
        Weaken,
    };

    Kind kind;
    std::string label;  // condition/mode label
    int amount = 0;     // Strengthen/Weaken only

    static ForceOp add_content_condition(std::string label);
    static ForceOp add_preparatory(std::string label);
    static ForceOp add_sincerity(std::string label);
    static ForceOp restrict_mode(std::string label);
    static ForceOp strengthen(int n);
    static ForceOp weaken(int n);
};

/// Applies the operations to a descriptor. Composition is commutative, so any
/// permutation of `ops` produces the same descriptor; degrees add up.
ForceDescriptor derive_force(const ForceDescriptor& base, const std::vector<ForceOp>& ops);

}  // namespace actmed::onto
