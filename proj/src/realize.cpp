#include "actmed/realize.hpp"

namespace actmed::onto {

bool satisfies(const Ontology& onto, const ABox& abox, const std::string& individual,
               const ClassExpr& expr) {
    switch (expr.kind) {
        case ClassExpr::Kind::Atomic:
            return abox.contains(Assertion::cls(expr.name, individual));
        case ClassExpr::Kind::Conjunction:
            for (const auto& child : expr.children)
                if (!satisfies(onto, abox, individual, child)) return false;
            return true;
        case ClassExpr::Kind::Existential:
            for (const auto& object : abox.objects_of(individual, expr.name)) {
                if (object.literal) continue;
                if (satisfies(onto, abox, object.text, expr.children[0])) return true;
            }
            return false;
    }
    return false;
}

ABox realize(const Ontology& onto, const ABox& m) {
    struct DownRule {
        std::string sub;
        std::vector<std::string> supers;
    };
    struct RecogRule {
        std::string head;
        const ClassExpr* body;
    };

    std::vector<DownRule> downs;
    std::vector<RecogRule> recogs;
    for (const auto& axiom : onto.axioms()) {
        auto supers = axiom.rhs.top_atomic_conjuncts();
        if (!supers.empty()) downs.push_back({axiom.lhs, std::move(supers)});
        if (axiom.kind == TBoxAxiom::Kind::EquivalentTo && !onto.is_primitive(axiom.lhs))
            recogs.push_back({axiom.lhs, &axiom.rhs});
    }

    ABox work = m;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Assertion> fresh;
        for (const auto& assertion : work.assertions()) {
            if (!assertion.is_class()) continue;
            for (const auto& rule : downs) {
                if (rule.sub != assertion.predicate) continue;
                for (const auto& super : rule.supers)
                    fresh.push_back(Assertion::cls(super, assertion.subject));
            }
        }
        for (const auto& rule : recogs)
            for (const auto& individual : work.individuals())
                if (!work.contains(Assertion::cls(rule.head, individual)) &&
                    satisfies(onto, work, individual, *rule.body))
                    fresh.push_back(Assertion::cls(rule.head, individual));
        for (auto& assertion : fresh)
            if (work.insert(std::move(assertion))) changed = true;
    }

    ABox out;
    for (const auto& assertion : work.assertions())
        if (!m.contains(assertion)) out.insert(assertion);
    return out;
}

ABox saturate(const Ontology& onto, const ABox& m) {
    ABox out = m;
    out.merge(realize(onto, m));
    return out;
}

}  // namespace actmed::onto
