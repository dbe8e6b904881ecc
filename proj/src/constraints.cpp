#include "actmed/constraints.hpp"

#include <algorithm>

namespace actmed::ec {

void ConstraintSet::merge(const ConstraintSet& other) {
    for (const auto& c : other.state) {
        bool dup = false;
        for (const auto& mine : state)
            if (to_string(mine) == to_string(c)) dup = true;
        if (!dup) state.push_back(c);
    }
    for (const auto& c : other.event) {
        bool dup = false;
        for (const auto& mine : event)
            if (to_string(mine) == to_string(c)) dup = true;
        if (!dup) event.push_back(c);
    }
}

std::string to_string(const StateConstraint& constraint) {
    std::string out;
    for (std::size_t i = 0; i < constraint.body.size(); ++i) {
        if (i) out += " & ";
        out += "HoldsAt(" + constraint.body[i].to_string() + ",t)";
    }
    out += " -> HoldsAt(" + constraint.head.to_string() + ",t)";
    return out;
}

std::string to_string(const EventConstraint& constraint) {
    return "Happens(send(" + constraint.trigger + "(?m)),t) -> Happens(send(" +
           constraint.implied + "(?m)),t)";
}

std::string ConstraintSet::to_text() const {
    std::string out;
    for (const auto& c : state) out += "[" + c.label + "] " + to_string(c) + "\n";
    for (const auto& c : event) out += "[" + c.label + "] " + to_string(c) + "\n";
    return out;
}

namespace {

void unfold(const onto::ClassExpr& expr, const std::string& var, int& next_object,
            std::vector<Fluent>& out) {
    switch (expr.kind) {
        case onto::ClassExpr::Kind::Atomic:
            out.push_back(Fluent::cls(expr.name, var));
            break;
        case onto::ClassExpr::Kind::Conjunction:
            for (const auto& child : expr.children) unfold(child, var, next_object, out);
            break;
        case onto::ClassExpr::Kind::Existential: {
            std::string object = next_object == 0 ? "?op" : "?op" + std::to_string(next_object);
            ++next_object;
            out.push_back(Fluent::prop(expr.name, var, Term::individual(object)));
            unfold(expr.children[0], object, next_object, out);
            break;
        }
    }
}

}  // namespace

ConstraintSet generate(const onto::Ontology& onto) {
    ConstraintSet out;
    for (const auto& axiom : onto.axioms()) {
        for (const auto& super : axiom.rhs.top_atomic_conjuncts()) {
            StateConstraint sc;
            sc.body.push_back(Fluent::cls(axiom.lhs, "?m"));
            sc.head = Fluent::cls(super, "?m");
            sc.label = axiom.lhs + "=>" + super;
            out.state.push_back(std::move(sc));

            EventConstraint ec;
            ec.trigger = axiom.lhs;
            ec.implied = super;
            ec.label = "evt:" + axiom.lhs + "=>" + super;
            out.event.push_back(std::move(ec));
        }
        if (axiom.kind == onto::TBoxAxiom::Kind::EquivalentTo &&
            !onto.is_primitive(axiom.lhs)) {
            StateConstraint sc;
            int next_object = 0;
            unfold(axiom.rhs, "?m", next_object, sc.body);
            sc.head = Fluent::cls(axiom.lhs, "?m");
            sc.label = "def:" + axiom.lhs;
            out.state.push_back(std::move(sc));
        }
    }
    auto state_key = [](const StateConstraint& c) { return c.label + "|" + to_string(c); };
    auto event_key = [](const EventConstraint& c) { return c.label + "|" + to_string(c); };
    std::sort(out.state.begin(), out.state.end(),
              [&](const auto& x, const auto& y) { return state_key(x) < state_key(y); });
    std::sort(out.event.begin(), out.event.end(),
              [&](const auto& x, const auto& y) { return event_key(x) < event_key(y); });
    out.state.erase(std::unique(out.state.begin(), out.state.end(),
                                [&](const auto& x, const auto& y) {
                                    return state_key(x) == state_key(y);
                                }),
                    out.state.end());
    out.event.erase(std::unique(out.event.begin(), out.event.end(),
                                [&](const auto& x, const auto& y) {
                                    return event_key(x) == event_key(y);
                                }),
                    out.event.end());
    return out;
}

}  // namespace actmed::ec
