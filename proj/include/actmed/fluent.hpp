#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "actmed/abox.hpp"

namespace actmed::ec {

/// A time-varying predicate. Six shapes cover everything the effect and
/// constraint machinery manipulates:
///   Named          f                        (abstract fluents, content ids)
///   Class          C(x)
///   Property       p(x,y) with y possibly a quoted literal
///   Commitment     C(debtor,creditor,p)
///   CondCommitment CC(debtor,creditor,q,p)
///   Accept         accept(accepter,towards,p)
/// Any name slot may hold a `?var`; observations must be ground.
struct Fluent {
    enum class Kind { Named, Class, Property, Commitment, CondCommitment, Accept };

    Kind kind = Kind::Named;
    std::string name;  // symbol, class or property name
    std::string a;     // individual / subject / debtor / accepter
    std::string b;     // object / creditor / towards
    bool object_literal = false;
    std::vector<Fluent> sub;  // condition/proposition slots

    static Fluent named(std::string symbol);
    static Fluent cls(std::string class_name, std::string individual);
    static Fluent prop(std::string property, std::string subject, Term object);
    static Fluent commitment(std::string debtor, std::string creditor, Fluent p);
    static Fluent cond_commitment(std::string debtor, std::string creditor, Fluent q, Fluent p);
    static Fluent accept(std::string accepter, std::string towards, Fluent p);

    bool is_variable() const;  // a Named `?var`
    bool ground() const;
    std::string to_string() const;

    bool operator==(const Fluent& other) const { return to_string() == other.to_string(); }
    bool operator<(const Fluent& other) const { return to_string() < other.to_string(); }
};

/// The event of sending one message. Identity is (act class, message id);
/// the resolved roles only affect the bound rendering used by effect facts.
struct EventTerm {
    std::string act_class;
    std::string message;
    std::optional<std::string> sender;
    std::optional<std::string> receiver;
    std::optional<std::string> content;

    std::string to_string() const;       // send(Class(message))
    std::string to_role_string() const;  // send(Class(sender,receiver,content)) when resolved

    bool same_event(const EventTerm& other) const {
        return act_class == other.act_class && message == other.message;
    }
};

/// Builds a send event for the message rooted at `root`, resolving the
/// sender/receiver/content roles from the ABox when present.
EventTerm make_send_event(std::string act_class, const ABox& abox, const std::string& root);

struct Observation {
    enum class Predicate { HoldsAt, ReleasedAt };

    bool positive = true;
    Predicate predicate = Predicate::HoldsAt;
    Fluent fluent;
    int time = 0;

    static Observation holds(Fluent f, int t);
    static Observation not_holds(Fluent f, int t);
    static Observation released(Fluent f, int t);

    std::string to_string() const;

    bool operator==(const Observation& other) const { return to_string() == other.to_string(); }
    bool operator<(const Observation& other) const { return to_string() < other.to_string(); }
};

using Gamma = std::set<Observation>;

struct TimedEvent {
    EventTerm event;
    int time = 0;
};

/// For message conversion the narrative is a singleton Happens(send(A(m)),t).
struct Narrative {
    std::vector<TimedEvent> events;

    bool occurs(const EventTerm& event, int time) const;
    void add(EventTerm event, int time);
};

/// Parses the fluent grammar above. With `role_keywords`, the tokens
/// `sender`, `receiver` and `content` read as the variables ?s, ?r, ?P.
Fluent parse_fluent(const std::string& text, bool role_keywords = false);

/// One observation per line: `HoldsAt(f,3)`, `!HoldsAt(f,3)`, `ReleasedAt(f,3)`.
Observation parse_observation(const std::string& text);

/// Observation file: one observation per line, `#` comments.
Gamma parse_gamma(const std::string& text);
Gamma load_gamma(const std::filesystem::path& path);

std::string dump_gamma(const Gamma& gamma);

}  // namespace actmed::ec
