#include "actmed/force.hpp"

#include "actmed/errors.hpp"

namespace actmed::onto {

std::string to_string(ForcePrimitive p) {
    switch (p) {
        case ForcePrimitive::Assertive: return "Assertive";
        case ForcePrimitive::Commissive: return "Commissive";
        case ForcePrimitive::Directive: return "Directive";
        case ForcePrimitive::Declarative: return "Declarative";
        case ForcePrimitive::Expressive: return "Expressive";
    }
    return "Assertive";
}

ForcePrimitive force_primitive_from(const std::string& name) {
    if (name == "Assertive") return ForcePrimitive::Assertive;
    if (name == "Commissive") return ForcePrimitive::Commissive;
    if (name == "Directive") return ForcePrimitive::Directive;
    if (name == "Declarative") return ForcePrimitive::Declarative;
    if (name == "Expressive") return ForcePrimitive::Expressive;
    throw Error("not a force primitive: " + name);
}

ForceOp ForceOp::add_content_condition(std::string label) {
    return {Kind::AddContentCondition, std::move(label), 0};
}
ForceOp ForceOp::add_preparatory(std::string label) {
    return {Kind::AddPreparatory, std::move(label), 0};
}
ForceOp ForceOp::add_sincerity(std::string label) {
    return {Kind::AddSincerity, std::move(label), 0};
}
ForceOp ForceOp::restrict_mode(std::string label) {
    return {Kind::RestrictMode, std::move(label), 0};
}
ForceOp ForceOp::strengthen(int n) { return {Kind::Strengthen, "", n}; }
ForceOp ForceOp::weaken(int n) { return {Kind::Weaken, "", n}; }

ForceDescriptor derive_force(const ForceDescriptor& base, const std::vector<ForceOp>& ops) {
    ForceDescriptor out = base;
    for (const auto& op : ops) {
        switch (op.kind) {
            case ForceOp::Kind::AddContentCondition: out.content_conditions.insert(op.label); break;
            case ForceOp::Kind::AddPreparatory: out.preparatory_conditions.insert(op.label); break;
            case ForceOp::Kind::AddSincerity: out.sincerity_conditions.insert(op.label); break;
            case ForceOp::Kind::RestrictMode: out.mode_of_achievement.insert(op.label); break;
            case ForceOp::Kind::Strengthen: out.degree_of_strength += op.amount; break;
            case ForceOp::Kind::Weaken: out.degree_of_strength -= op.amount; break;
        }
    }
    return out;
}

}  // namespace actmed::onto
