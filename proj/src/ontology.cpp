#include "actmed/ontology.hpp"

#include <cctype>
#include <deque>
#include <fstream>
#include <sstream>

#include "actmed/errors.hpp"

namespace actmed::onto {

std::string to_string(Layer layer) {
    switch (layer) {
        case Layer::Common: return "common";
        case Layer::Application: return "application";
        case Layer::Domain: return "domain";
        case Layer::Action: return "action";
    }
    return "common";
}

Layer layer_from(const std::string& name) {
    if (name == "common") return Layer::Common;
    if (name == "application") return Layer::Application;
    if (name == "domain") return Layer::Domain;
    if (name == "action") return Layer::Action;
    throw Error("unknown layer: " + name);
}

ClassExpr ClassExpr::atomic(std::string cls) {
    ClassExpr e;
    e.kind = Kind::Atomic;
    e.name = std::move(cls);
    return e;
}

ClassExpr ClassExpr::conj(std::vector<ClassExpr> conjuncts) {
    if (conjuncts.size() < 2) throw Error("conjunction needs at least two conjuncts");
    ClassExpr e;
    e.kind = Kind::Conjunction;
    e.children = std::move(conjuncts);
    return e;
}

ClassExpr ClassExpr::some(std::string property, ClassExpr filler) {
    ClassExpr e;
    e.kind = Kind::Existential;
    e.name = std::move(property);
    e.children.push_back(std::move(filler));
    return e;
}

std::vector<std::string> ClassExpr::top_atomic_conjuncts() const {
    std::vector<std::string> out;
    switch (kind) {
        case Kind::Atomic: out.push_back(name); break;
        case Kind::Conjunction:
            for (const auto& child : children) {
                auto sub = child.top_atomic_conjuncts();
                out.insert(out.end(), sub.begin(), sub.end());
            }
            break;
        case Kind::Existential: break;
    }
    return out;
}

std::string ClassExpr::to_string() const {
    switch (kind) {
        case Kind::Atomic: return name;
        case Kind::Conjunction: {
            std::string out;
            for (std::size_t i = 0; i < children.size(); ++i) {
                if (i) out += " and ";
                const auto& child = children[i];
                if (child.kind == Kind::Atomic)
                    out += child.to_string();
                else
                    out += "(" + child.to_string() + ")";
            }
            return out;
        }
        case Kind::Existential:
            return name + " some " + (children[0].kind == Kind::Atomic
                                          ? children[0].to_string()
                                          : "(" + children[0].to_string() + ")");
    }
    return "";
}

void Ontology::add(TBoxAxiom axiom) {
    for (const auto& super : axiom.rhs.top_atomic_conjuncts()) up_[axiom.lhs].insert(super);
    if (axiom.kind == TBoxAxiom::Kind::EquivalentTo && axiom.rhs.kind == ClassExpr::Kind::Atomic)
        up_[axiom.rhs.name].insert(axiom.lhs);
    axioms_.push_back(std::move(axiom));
}

void Ontology::add_force(const std::string& act_class, ForceDescriptor descriptor) {
    forces_[act_class] = std::move(descriptor);
}

void Ontology::merge(const Ontology& other) {
    for (const auto& axiom : other.axioms_) add(axiom);
    for (const auto& [cls, descriptor] : other.forces_) forces_[cls] = descriptor;
}

std::optional<ForceDescriptor> Ontology::force_of(const std::string& act_class) const {
    auto it = forces_.find(act_class);
    if (it == forces_.end()) return std::nullopt;
    return it->second;
}

bool Ontology::is_primitive(const std::string& cls) const {
    return cls == "Assertive" || cls == "Commissive" || cls == "Directive" ||
           cls == "Declarative" || cls == "Expressive";
}

bool Ontology::is_subclass_of(const std::string& sub, const std::string& super) const {
    if (sub == super) return true;
    std::set<std::string> seen{sub};
    std::deque<std::string> queue{sub};
    while (!queue.empty()) {
        auto cur = queue.front();
        queue.pop_front();
        auto it = up_.find(cur);
        if (it == up_.end()) continue;
        for (const auto& next : it->second) {
            if (next == super) return true;
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return false;
}

std::set<std::string> Ontology::superclasses_of(const std::string& cls) const {
    std::set<std::string> seen{cls};
    std::deque<std::string> queue{cls};
    while (!queue.empty()) {
        auto cur = queue.front();
        queue.pop_front();
        auto it = up_.find(cur);
        if (it == up_.end()) continue;
        for (const auto& next : it->second)
            if (seen.insert(next).second) queue.push_back(next);
    }
    return seen;
}

std::set<std::string> Ontology::most_specific(const std::set<std::string>& classes) const {
    std::set<std::string> out;
    for (const auto& cls : classes) {
        bool has_strict_sub = false;
        for (const auto& other : classes) {
            if (other != cls && is_subclass_of(other, cls) && !is_subclass_of(cls, other)) {
                has_strict_sub = true;
                break;
            }
        }
        if (!has_strict_sub) out.insert(cls);
    }
    return out;
}

namespace {

struct LineTokens {
    std::vector<std::string> toks;
    std::size_t pos = 0;
    int line;

    explicit LineTokens(int line_no) : line(line_no) {}

    bool done() const { return pos >= toks.size(); }
    const std::string& peek() const {
        static const std::string empty;
        return done() ? empty : toks[pos];
    }
    std::string next() {
        if (done()) throw UnsupportedAxiomShape(line, "unexpected end of axiom");
        return toks[pos++];
    }
};

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.' ||
           c == ':';
}

LineTokens tokenize(const std::string& text, int line_no) {
    LineTokens out(line_no);
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '(' || c == ')') {
            out.toks.emplace_back(1, c);
            ++i;
        } else if (ident_char(c)) {
            std::size_t start = i;
            while (i < text.size() && ident_char(text[i])) ++i;
            out.toks.push_back(text.substr(start, i - start));
        } else {
            throw UnsupportedAxiomShape(line_no, std::string("unexpected character '") + c + "'");
        }
    }
    return out;
}

bool unsupported_keyword(const std::string& tok) {
    return tok == "or" || tok == "not" || tok == "only" || tok == "min" || tok == "max" ||
           tok == "exactly" || tok == "value" || tok == "Self";
}

ClassExpr parse_expr(LineTokens& in);

ClassExpr parse_unit(LineTokens& in) {
    if (in.peek() == "(") {
        in.next();
        ClassExpr inner = parse_expr(in);
        if (in.peek() != ")") throw UnsupportedAxiomShape(in.line, "expected ')'");
        in.next();
        return inner;
    }
    std::string name = in.next();
    if (unsupported_keyword(name))
        throw UnsupportedAxiomShape(in.line, "'" + name + "' is outside the supported fragment");
    if (name == "and" || name == "some" || name == ")")
        throw UnsupportedAxiomShape(in.line, "misplaced '" + name + "'");
    if (in.peek() == "some") {
        in.next();
        ClassExpr filler = parse_unit(in);
        return ClassExpr::some(std::move(name), std::move(filler));
    }
    return ClassExpr::atomic(std::move(name));
}

ClassExpr parse_expr(LineTokens& in) {
    std::vector<ClassExpr> conjuncts;
    conjuncts.push_back(parse_unit(in));
    while (in.peek() == "and") {
        in.next();
        conjuncts.push_back(parse_unit(in));
    }
    if (unsupported_keyword(in.peek()))
        throw UnsupportedAxiomShape(in.line,
                                    "'" + in.peek() + "' is outside the supported fragment");
    if (conjuncts.size() == 1) return std::move(conjuncts[0]);
    return ClassExpr::conj(std::move(conjuncts));
}

std::set<std::string> parse_label_set(const std::string& value, int line) {
    // {a,b,c}
    if (value.size() < 2 || value.front() != '{' || value.back() != '}')
        throw UnsupportedAxiomShape(line, "expected {label,...}: " + value);
    std::set<std::string> out;
    std::string body = value.substr(1, value.size() - 2);
    std::string cur;
    for (char c : body) {
        if (c == ',') {
            if (!cur.empty()) out.insert(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.insert(cur);
    return out;
}

void parse_force_line(Ontology& onto, const std::string& rest, int line) {
    std::istringstream in(rest);
    std::string cls;
    in >> cls;
    if (cls.empty()) throw UnsupportedAxiomShape(line, "force line without a class name");
    ForceDescriptor descriptor;
    bool have_base = false;
    std::string field;
    while (in >> field) {
        auto eq = field.find('=');
        if (eq == std::string::npos)
            throw UnsupportedAxiomShape(line, "expected key=value in force line: " + field);
        std::string key = field.substr(0, eq);
        std::string value = field.substr(eq + 1);
        if (key == "base") {
            descriptor.base = force_primitive_from(value);
            have_base = true;
        } else if (key == "mode") {
            descriptor.mode_of_achievement = parse_label_set(value, line);
        } else if (key == "degree") {
            descriptor.degree_of_strength = std::stoi(value);
        } else if (key == "content") {
            descriptor.content_conditions = parse_label_set(value, line);
        } else if (key == "prep") {
            descriptor.preparatory_conditions = parse_label_set(value, line);
        } else if (key == "sincerity") {
            descriptor.sincerity_conditions = parse_label_set(value, line);
        } else {
            throw UnsupportedAxiomShape(line, "unknown force field: " + key);
        }
    }
    if (!have_base) throw MissingField("base");
    onto.add_force(cls, std::move(descriptor));
}

}  // namespace

Ontology parse_ontology(const std::string& text) {
    Ontology onto;
    Layer layer = Layer::Common;
    std::string system;

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        auto hash = raw.find('#');
        std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
        auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        auto end = line.find_last_not_of(" \t\r");
        line = line.substr(begin, end - begin + 1);

        if (line.rfind("layer:", 0) == 0) {
            auto value = line.substr(6);
            value.erase(0, value.find_first_not_of(" \t"));
            layer = layer_from(value);
            continue;
        }
        if (line.rfind("system:", 0) == 0) {
            system = line.substr(7);
            system.erase(0, system.find_first_not_of(" \t"));
            continue;
        }
        if (line.rfind("force ", 0) == 0) {
            parse_force_line(onto, line.substr(6), line_no);
            continue;
        }

        LineTokens toks = tokenize(line, line_no);
        std::string lhs = toks.next();
        std::string op = toks.next();
        TBoxAxiom axiom;
        axiom.lhs = std::move(lhs);
        axiom.layer = layer;
        axiom.system = system;
        if (op == "SubClassOf")
            axiom.kind = TBoxAxiom::Kind::SubClassOf;
        else if (op == "EquivalentTo")
            axiom.kind = TBoxAxiom::Kind::EquivalentTo;
        else
            throw UnsupportedAxiomShape(line_no, "expected SubClassOf or EquivalentTo, got '" +
                                                     op + "'");
        axiom.rhs = parse_expr(toks);
        if (!toks.done())
            throw UnsupportedAxiomShape(line_no, "trailing tokens after axiom: '" + toks.peek() +
                                                     "'");
        onto.add(std::move(axiom));
    }
    return onto;
}

Ontology load_ontology(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open ontology file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_ontology(buf.str());
}

}  // namespace actmed::onto
