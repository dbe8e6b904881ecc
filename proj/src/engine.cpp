#include "actmed/engine.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "actmed/errors.hpp"

namespace actmed::ec {

void Trace::note(const std::string& rule, const std::string& fact) {
    lines.push_back("[" + rule + "] " + fact);
}

std::string Trace::to_text() const {
    std::string out;
    for (const auto& line : lines) out += line + "\n";
    return out;
}

namespace {

bool is_var(const std::string& text) { return !text.empty() && text[0] == '?'; }

bool unify_name(const std::string& pattern, const std::string& actual, Bindings& bindings) {
    if (is_var(pattern)) {
        auto it = bindings.find(pattern);
        if (it != bindings.end())
            return it->second.kind == Fluent::Kind::Named && it->second.name == actual;
        bindings[pattern] = Fluent::named(actual);
        return true;
    }
    return pattern == actual;
}

}  // namespace

bool unify(const Fluent& pattern, const Fluent& actual, Bindings& bindings) {
    if (pattern.is_variable()) {
        auto it = bindings.find(pattern.name);
        if (it != bindings.end()) return it->second == actual;
        bindings[pattern.name] = actual;
        return true;
    }
    if (pattern.kind != actual.kind) return false;
    switch (pattern.kind) {
        case Fluent::Kind::Named: return pattern.name == actual.name;
        case Fluent::Kind::Class:
            return pattern.name == actual.name && unify_name(pattern.a, actual.a, bindings);
        case Fluent::Kind::Property:
            if (pattern.name != actual.name) return false;
            if (!unify_name(pattern.a, actual.a, bindings)) return false;
            if (is_var(pattern.b))
                return !actual.object_literal && unify_name(pattern.b, actual.b, bindings);
            return pattern.object_literal == actual.object_literal && pattern.b == actual.b;
        case Fluent::Kind::Commitment:
        case Fluent::Kind::CondCommitment:
        case Fluent::Kind::Accept:
            if (!unify_name(pattern.a, actual.a, bindings)) return false;
            if (!unify_name(pattern.b, actual.b, bindings)) return false;
            for (std::size_t i = 0; i < pattern.sub.size(); ++i)
                if (!unify(pattern.sub[i], actual.sub[i], bindings)) return false;
            return true;
    }
    return false;
}

namespace {

std::string substitute_name(const std::string& name, const Bindings& bindings) {
    if (!is_var(name)) return name;
    auto it = bindings.find(name);
    if (it == bindings.end() || it->second.kind != Fluent::Kind::Named)
        throw UnboundVariable(name);
    return it->second.name;
}

}  // namespace

Fluent substitute(const Fluent& pattern, const Bindings& bindings) {
    if (pattern.is_variable()) {
        auto it = bindings.find(pattern.name);
        if (it == bindings.end()) throw UnboundVariable(pattern.name);
        return it->second;
    }
    Fluent out = pattern;
    out.a = substitute_name(pattern.a, bindings);
    out.b = substitute_name(pattern.b, bindings);
    out.sub.clear();
    for (const auto& child : pattern.sub) out.sub.push_back(substitute(child, bindings));
    return out;
}

Narrative close_events(const Narrative& delta, const ConstraintSet& psi, Trace* trace) {
    Narrative out = delta;
    bool changed = true;
    while (changed) {
        changed = false;
        auto snapshot = out.events;
        for (const auto& timed : snapshot) {
            for (const auto& constraint : psi.event) {
                if (constraint.trigger != timed.event.act_class) continue;
                EventTerm implied = timed.event;
                implied.act_class = constraint.implied;
                if (!out.occurs(implied, timed.time)) {
                    if (trace)
                        trace->note(constraint.label, "Happens(" + implied.to_string() + "," +
                                                          std::to_string(timed.time) + ")");
                    out.add(std::move(implied), timed.time);
                    changed = true;
                }
            }
        }
    }
    return out;
}

namespace {

std::vector<Fluent> held_at(const Gamma& gamma, int time) {
    std::vector<Fluent> out;
    for (const auto& obs : gamma)
        if (obs.positive && obs.predicate == Observation::Predicate::HoldsAt && obs.time == time)
            out.push_back(obs.fluent);
    return out;
}

void match_conditions(const std::vector<Fluent>& conditions, std::size_t index,
                      const Bindings& bindings, const std::vector<Fluent>& pool,
                      const std::function<void(const Bindings&)>& emit) {
    if (index == conditions.size()) {
        emit(bindings);
        return;
    }
    for (const auto& actual : pool) {
        Bindings next = bindings;
        if (unify(conditions[index], actual, next))
            match_conditions(conditions, index + 1, next, pool, emit);
    }
}

class EffectSet {
public:
    explicit EffectSet(Trace* trace) : trace_(trace) {}

    bool add(GroundEffect effect) {
        std::string key = effect.event.to_string() + "|" + effect.to_string();
        if (!keys_.insert(key).second) return false;
        if (trace_) trace_->note(effect.source, effect.to_string());
        effects_.push_back(std::move(effect));
        return true;
    }

    bool initiates(const EventTerm& event, const Fluent& fluent, int time) const {
        for (const auto& e : effects_)
            if (e.kind == EffectKind::Initiates && e.time == time &&
                e.event.same_event(event) && e.fluent == fluent)
                return true;
        return false;
    }

    std::vector<GroundEffect> take() { return std::move(effects_); }
    const std::vector<GroundEffect>& view() const { return effects_; }

private:
    Trace* trace_;
    std::set<std::string> keys_;
    std::vector<GroundEffect> effects_;
};

}  // namespace

std::vector<GroundEffect> ground_effects(const std::vector<EffectAxiom>& sigma,
                                         const Narrative& events, const Gamma& gamma,
                                         Trace* trace) {
    EffectSet out(trace);

    for (const auto& axiom : sigma) {
        if (axiom.form != EffectAxiom::Form::Template) continue;
        for (const auto& timed : events.events) {
            if (timed.event.act_class != axiom.act_class) continue;
            Bindings base;
            base["?m"] = Fluent::named(timed.event.message);
            if (timed.event.sender) base["?s"] = Fluent::named(*timed.event.sender);
            if (timed.event.receiver) base["?r"] = Fluent::named(*timed.event.receiver);
            if (timed.event.content) base["?P"] = Fluent::named(*timed.event.content);
            auto pool = held_at(gamma, timed.time);
            match_conditions(axiom.conditions, 0, base, pool, [&](const Bindings& bindings) {
                GroundEffect effect;
                effect.event = timed.event;
                effect.kind = axiom.kind;
                effect.fluent = substitute(axiom.fluent, bindings);
                effect.time = timed.time;
                effect.source = axiom.label;
                out.add(std::move(effect));
            });
        }
    }

    bool f1 = false, f2 = false, f3 = false;
    for (const auto& axiom : sigma) {
        f1 |= axiom.form == EffectAxiom::Form::CommitF1;
        f2 |= axiom.form == EffectAxiom::Form::CommitF2;
        f3 |= axiom.form == EffectAxiom::Form::CommitF3;
    }
    if (f1 || f2 || f3) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& timed : events.events) {
                if (!timed.event.sender) continue;
                const std::string& agent = *timed.event.sender;
                for (const auto& held : held_at(gamma, timed.time)) {
                    if (f1 && held.kind == Fluent::Kind::Commitment && held.a == agent &&
                        out.initiates(timed.event, held.sub[0], timed.time)) {
                        GroundEffect e{timed.event, EffectKind::Terminates, held, timed.time,
                                       "F1"};
                        changed |= out.add(std::move(e));
                    }
                    if (held.kind != Fluent::Kind::CondCommitment) continue;
                    if (f2 && held.b == agent &&
                        out.initiates(timed.event, held.sub[0], timed.time)) {
                        Fluent base = Fluent::commitment(held.a, held.b, held.sub[1]);
                        GroundEffect init{timed.event, EffectKind::Initiates, std::move(base),
                                          timed.time, "F2"};
                        changed |= out.add(std::move(init));
                        GroundEffect term{timed.event, EffectKind::Terminates, held, timed.time,
                                          "F2"};
                        changed |= out.add(std::move(term));
                    }
                    if (f3 && held.a == agent &&
                        out.initiates(timed.event, held.sub[1], timed.time)) {
                        GroundEffect e{timed.event, EffectKind::Terminates, held, timed.time,
                                       "F3"};
                        changed |= out.add(std::move(e));
                    }
                }
            }
        }
    }
    return out.take();
}

int infer_time(const Gamma& gamma, const Narrative& delta) {
    if (!delta.events.empty()) {
        int t = delta.events.front().time;
        for (const auto& timed : delta.events) t = std::max(t, timed.time);
        return t;
    }
    int t = 0;
    for (const auto& obs : gamma) t = std::max(t, obs.time);
    return t;
}

Gamma step(const Gamma& gamma, const Narrative& delta, const std::vector<EffectAxiom>& sigma,
           const ConstraintSet& psi, int t, Trace* trace) {
    Narrative closed = close_events(delta, psi, trace);
    auto effects = ground_effects(sigma, closed, gamma, trace);

    std::map<std::string, Fluent> universe;
    std::set<std::string> initiated, terminated, released;
    for (const auto& effect : effects) {
        if (effect.time != t) continue;
        std::string key = effect.fluent.to_string();
        universe.emplace(key, effect.fluent);
        switch (effect.kind) {
            case EffectKind::Initiates: initiated.insert(key); break;
            case EffectKind::Terminates: terminated.insert(key); break;
            case EffectKind::Releases: released.insert(key); break;
        }
    }
    std::set<std::string> held;
    for (const auto& obs : gamma) {
        if (!obs.positive || obs.predicate != Observation::Predicate::HoldsAt || obs.time != t)
            continue;
        std::string key = obs.fluent.to_string();
        universe.emplace(key, obs.fluent);
        held.insert(key);
    }

    Gamma phi;
    auto put = [&](Observation obs, const char* rule) {
        if (phi.insert(obs).second && trace) trace->note(rule, obs.to_string());
    };
    for (const auto& [key, fluent] : universe) {
        if (initiated.count(key)) put(Observation::holds(fluent, t + 1), "DEC9");
        if (terminated.count(key)) put(Observation::not_holds(fluent, t + 1), "DEC10");
        if (released.count(key)) put(Observation::released(fluent, t + 1), "released");
        if (held.count(key) && !terminated.count(key) && !released.count(key) &&
            !initiated.count(key))
            put(Observation::holds(fluent, t + 1), "DEC5");
    }
    return phi;
}

bool check_consistent(const Gamma& phi) {
    std::set<std::string> positives, negatives;
    for (const auto& obs : phi) {
        std::string key = (obs.predicate == Observation::Predicate::HoldsAt ? "H|" : "R|") +
                          obs.fluent.to_string() + "|" + std::to_string(obs.time);
        (obs.positive ? positives : negatives).insert(key);
    }
    for (const auto& key : positives)
        if (negatives.count(key)) return false;
    return true;
}

EntailResult entails(const Gamma& phi2, const Gamma& phi1, const ConstraintSet& psi_union,
                     Trace* trace) {
    // positive closure per timepoint
    std::map<int, std::map<std::string, Fluent>> closure;
    for (const auto& obs : phi2)
        if (obs.positive && obs.predicate == Observation::Predicate::HoldsAt)
            closure[obs.time].emplace(obs.fluent.to_string(), obs.fluent);

    for (auto& [time, bucket] : closure) {
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<Fluent> pool;
            pool.reserve(bucket.size());
            for (const auto& [key, fluent] : bucket) pool.push_back(fluent);
            for (const auto& constraint : psi_union.state) {
                match_conditions(constraint.body, 0, {}, pool, [&](const Bindings& bindings) {
                    Fluent head = substitute(constraint.head, bindings);
                    std::string key = head.to_string();
                    if (bucket.emplace(key, head).second) {
                        if (trace)
                            trace->note(constraint.label, "HoldsAt(" + key + "," +
                                                              std::to_string(time) + ")");
                        changed = true;
                    }
                });
            }
        }
    }

    EntailResult result;
    for (const auto& obs : phi1) {
        bool covered = false;
        if (obs.positive && obs.predicate == Observation::Predicate::HoldsAt) {
            auto it = closure.find(obs.time);
            covered = it != closure.end() && it->second.count(obs.fluent.to_string()) > 0;
        } else {
            covered = phi2.count(obs) > 0;
        }
        if (!covered) result.missing.insert(obs);
    }
    result.entailed = result.missing.empty();
    return result;
}

}  // namespace actmed::ec
