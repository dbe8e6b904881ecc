#include "actmed/effect.hpp"

#include <sstream>

#include "actmed/errors.hpp"

namespace actmed::ec {

std::string to_string(EffectKind kind) {
    switch (kind) {
        case EffectKind::Initiates: return "Initiates";
        case EffectKind::Terminates: return "Terminates";
        case EffectKind::Releases: return "Releases";
    }
    return "Initiates";
}

EffectAxiom EffectAxiom::commit_rule(Form form) {
    EffectAxiom axiom;
    axiom.form = form;
    switch (form) {
        case Form::CommitF1: axiom.label = "F1"; break;
        case Form::CommitF2: axiom.label = "F2"; break;
        case Form::CommitF3: axiom.label = "F3"; break;
        case Form::Template: break;
    }
    return axiom;
}

std::string GroundEffect::to_string() const {
    return ec::to_string(kind) + "(" + event.to_role_string() + "," + fluent.to_string() + "," +
           std::to_string(time) + ")";
}

EffectAxiom parse_effect_clause(const std::string& act_class, const std::string& text) {
    // <kind> <fluent> [when holds <fluent> [and <fluent>]...]
    EffectAxiom axiom;
    axiom.act_class = act_class;

    auto when = text.find(" when ");
    std::string head = when == std::string::npos ? text : text.substr(0, when);
    std::string rest = when == std::string::npos ? "" : text.substr(when + 6);

    std::istringstream in(head);
    std::string kind;
    in >> kind;
    if (kind == "initiates")
        axiom.kind = EffectKind::Initiates;
    else if (kind == "terminates")
        axiom.kind = EffectKind::Terminates;
    else if (kind == "releases")
        axiom.kind = EffectKind::Releases;
    else
        throw SyntaxError(0, "initiates/terminates/releases, got '" + kind + "'");
    std::string fluent_text;
    std::getline(in, fluent_text);
    axiom.fluent = parse_fluent(fluent_text, true);

    if (!rest.empty()) {
        std::istringstream win(rest);
        std::string holds;
        win >> holds;
        if (holds != "holds") throw SyntaxError(0, "'holds' after 'when'");
        std::string tail;
        std::getline(win, tail);
        std::string current;
        std::istringstream parts(tail);
        // split on the word `and` between fluents
        std::string word;
        while (parts >> word) {
            if (word == "and") {
                if (!current.empty()) axiom.conditions.push_back(parse_fluent(current, true));
                current.clear();
            } else {
                current += word;
            }
        }
        if (!current.empty()) axiom.conditions.push_back(parse_fluent(current, true));
    }
    axiom.label = "sigma:" + act_class + ":" + to_string(axiom.kind) + ":" +
                  axiom.fluent.to_string();
    return axiom;
}

}  // namespace actmed::ec
