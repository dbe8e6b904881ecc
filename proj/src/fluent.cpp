#include "actmed/fluent.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "actmed/errors.hpp"

namespace actmed::ec {

Fluent Fluent::named(std::string symbol) {
    Fluent f;
    f.kind = Kind::Named;
    f.name = std::move(symbol);
    return f;
}

Fluent Fluent::cls(std::string class_name, std::string individual) {
    Fluent f;
    f.kind = Kind::Class;
    f.name = std::move(class_name);
    f.a = std::move(individual);
    return f;
}

Fluent Fluent::prop(std::string property, std::string subject, Term object) {
    Fluent f;
    f.kind = Kind::Property;
    f.name = std::move(property);
    f.a = std::move(subject);
    f.b = std::move(object.text);
    f.object_literal = object.literal;
    return f;
}

Fluent Fluent::commitment(std::string debtor, std::string creditor, Fluent p) {
    Fluent f;
    f.kind = Kind::Commitment;
    f.a = std::move(debtor);
    f.b = std::move(creditor);
    f.sub.push_back(std::move(p));
    return f;
}

Fluent Fluent::cond_commitment(std::string debtor, std::string creditor, Fluent q, Fluent p) {
    Fluent f;
    f.kind = Kind::CondCommitment;
    f.a = std::move(debtor);
    f.b = std::move(creditor);
    f.sub.push_back(std::move(q));
    f.sub.push_back(std::move(p));
    return f;
}

Fluent Fluent::accept(std::string accepter, std::string towards, Fluent p) {
    Fluent f;
    f.kind = Kind::Accept;
    f.a = std::move(accepter);
    f.b = std::move(towards);
    f.sub.push_back(std::move(p));
    return f;
}

namespace {

bool is_var(const std::string& text) { return !text.empty() && text[0] == '?'; }

std::string quote(const std::string& text) {
    std::string out = "'";
    for (char c : text) {
        if (c == '\'' || c == '\\') out += '\\';
        out += c;
    }
    return out + "'";
}

}  // namespace

bool Fluent::is_variable() const { return kind == Kind::Named && is_var(name); }

bool Fluent::ground() const {
    if (is_var(name) || is_var(a) || is_var(b)) return false;
    for (const auto& child : sub)
        if (!child.ground()) return false;
    return true;
}

std::string Fluent::to_string() const {
    switch (kind) {
        case Kind::Named: return name;
        case Kind::Class: return name + "(" + a + ")";
        case Kind::Property:
            return name + "(" + a + "," + (object_literal ? quote(b) : b) + ")";
        case Kind::Commitment: return "C(" + a + "," + b + "," + sub[0].to_string() + ")";
        case Kind::CondCommitment:
            return "CC(" + a + "," + b + "," + sub[0].to_string() + "," + sub[1].to_string() + ")";
        case Kind::Accept: return "accept(" + a + "," + b + "," + sub[0].to_string() + ")";
    }
    return name;
}

std::string EventTerm::to_string() const { return "send(" + act_class + "(" + message + "))"; }

std::string EventTerm::to_role_string() const {
    if (sender && receiver && content)
        return "send(" + act_class + "(" + *sender + "," + *receiver + "," + *content + "))";
    return to_string();
}

EventTerm make_send_event(std::string act_class, const ABox& abox, const std::string& root) {
    EventTerm event;
    event.act_class = std::move(act_class);
    event.message = root;
    if (auto s = abox.object_of(root, "hasSender"); s && !s->literal) event.sender = s->text;
    if (auto r = abox.object_of(root, "hasReceiver"); r && !r->literal) event.receiver = r->text;
    if (auto c = abox.object_of(root, "hasContent"); c && !c->literal) event.content = c->text;
    return event;
}

Observation Observation::holds(Fluent f, int t) {
    Observation o;
    o.fluent = std::move(f);
    o.time = t;
    return o;
}

Observation Observation::not_holds(Fluent f, int t) {
    Observation o = holds(std::move(f), t);
    o.positive = false;
    return o;
}

Observation Observation::released(Fluent f, int t) {
    Observation o = holds(std::move(f), t);
    o.predicate = Predicate::ReleasedAt;
    return o;
}

std::string Observation::to_string() const {
    std::string head = predicate == Predicate::HoldsAt ? "HoldsAt" : "ReleasedAt";
    std::string out = head + "(" + fluent.to_string() + "," + std::to_string(time) + ")";
    return positive ? out : "!" + out;
}

bool Narrative::occurs(const EventTerm& event, int time) const {
    for (const auto& timed : events)
        if (timed.time == time && timed.event.same_event(event)) return true;
    return false;
}

void Narrative::add(EventTerm event, int time) {
    if (!occurs(event, time)) events.push_back({std::move(event), time});
}

namespace {

class FluentReader {
public:
    FluentReader(const std::string& text, bool role_keywords)
        : text_(text), roles_(role_keywords) {}

    Fluent read() {
        Fluent f = fluent();
        skip_ws();
        if (pos_ != text_.size()) throw SyntaxError(pos_, "end of fluent");
        return f;
    }

    Fluent fluent() {
        skip_ws();
        if (peek() == '\'') {
            // quoted literal in term position is invalid at top level
            throw SyntaxError(pos_, "fluent");
        }
        std::string name = ident();
        skip_ws();
        if (peek() != '(') return Fluent::named(map_role(name));
        expect('(');
        if (name == "C") {
            std::string x = term();
            expect(',');
            std::string y = term();
            expect(',');
            Fluent p = fluent();
            expect(')');
            return Fluent::commitment(x, y, std::move(p));
        }
        if (name == "CC") {
            std::string x = term();
            expect(',');
            std::string y = term();
            expect(',');
            Fluent q = fluent();
            expect(',');
            Fluent p = fluent();
            expect(')');
            return Fluent::cond_commitment(x, y, std::move(q), std::move(p));
        }
        if (name == "accept") {
            std::string x = term();
            expect(',');
            std::string y = term();
            expect(',');
            Fluent p = fluent();
            expect(')');
            return Fluent::accept(x, y, std::move(p));
        }
        std::string first = term();
        skip_ws();
        if (peek() == ')') {
            expect(')');
            return Fluent::cls(name, first);
        }
        expect(',');
        skip_ws();
        Term object = peek() == '\'' ? Term::lit(literal()) : Term::individual(term());
        expect(')');
        return Fluent::prop(name, first, object);
    }

    int integer() {
        skip_ws();
        std::size_t start = pos_;
        if (peek() == '-') ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw SyntaxError(pos_, "timepoint");
        return std::stoi(text_.substr(start, pos_ - start));
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c) throw SyntaxError(pos_, std::string("'") + c + "'");
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool consume_word(const std::string& word) {
        skip_ws();
        if (text_.compare(pos_, word.size(), word) == 0) {
            pos_ += word.size();
            return true;
        }
        return false;
    }

    std::size_t pos() const { return pos_; }

private:
    static bool ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '?' ||
               c == ':' || c == '.';
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
        if (pos_ == start) throw SyntaxError(pos_, "identifier");
        return text_.substr(start, pos_ - start);
    }

    std::string literal() {
        expect('\'');
        std::string out;
        while (pos_ < text_.size() && text_[pos_] != '\'') {
            if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
            out += text_[pos_++];
        }
        expect('\'');
        return out;
    }

    std::string term() { return map_role(ident()); }

    std::string map_role(const std::string& name) const {
        if (!roles_) return name;
        if (name == "sender") return "?s";
        if (name == "receiver") return "?r";
        if (name == "content") return "?P";
        return name;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    bool roles_;
};

}  // namespace

Fluent parse_fluent(const std::string& text, bool role_keywords) {
    FluentReader reader(text, role_keywords);
    return reader.read();
}

Observation parse_observation(const std::string& text) {
    FluentReader reader(text, false);
    Observation out;
    reader.skip_ws();
    if (reader.peek() == '!') {
        reader.expect('!');
        out.positive = false;
    }
    if (reader.consume_word("HoldsAt"))
        out.predicate = Observation::Predicate::HoldsAt;
    else if (reader.consume_word("ReleasedAt"))
        out.predicate = Observation::Predicate::ReleasedAt;
    else
        throw SyntaxError(reader.pos(), "HoldsAt or ReleasedAt");
    reader.expect('(');
    out.fluent = reader.fluent();
    reader.expect(',');
    out.time = reader.integer();
    reader.expect(')');
    reader.skip_ws();
    if (reader.peek() != '\0') throw SyntaxError(reader.pos(), "end of observation");
    if (!out.fluent.ground()) throw UnboundVariable(out.fluent.to_string());
    return out;
}

Gamma parse_gamma(const std::string& text) {
    Gamma out;
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        auto hash = raw.find('#');
        std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
        auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        auto end = line.find_last_not_of(" \t\r");
        out.insert(parse_observation(line.substr(begin, end - begin + 1)));
    }
    return out;
}

Gamma load_gamma(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open observation file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_gamma(buf.str());
}

std::string dump_gamma(const Gamma& gamma) {
    std::string out;
    for (const auto& obs : gamma) out += obs.to_string() + "\n";
    return out;
}

}  // namespace actmed::ec
