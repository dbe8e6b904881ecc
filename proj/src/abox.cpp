#include "actmed/abox.hpp"

#include <sstream>

#include "actmed/errors.hpp"

namespace actmed {

namespace {
constexpr const char* kRdfPrefix = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
}

std::string Term::to_string() const {
    if (!literal) return text;
    std::string out = "'";
    for (char c : text) {
        if (c == '\'' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('\'');
    return out;
}

Assertion Assertion::cls(std::string class_name, std::string individual) {
    Assertion a;
    a.kind = Kind::Class;
    a.predicate = std::move(class_name);
    a.subject = std::move(individual);
    return a;
}

Assertion Assertion::prop(std::string property, std::string subject, Term object) {
    Assertion a;
    a.kind = Kind::Property;
    a.predicate = std::move(property);
    a.subject = std::move(subject);
    a.object = std::move(object);
    return a;
}

std::string Assertion::to_string() const {
    if (kind == Kind::Class) return subject + " rdf:type " + predicate;
    return subject + " " + predicate + " " + object.to_string();
}

void ABox::merge(const ABox& other) {
    assertions_.insert(other.assertions_.begin(), other.assertions_.end());
}

std::vector<std::string> ABox::classes_of(const std::string& individual) const {
    std::vector<std::string> out;
    for (const auto& a : assertions_)
        if (a.is_class() && a.subject == individual) out.push_back(a.predicate);
    return out;
}

std::set<std::string> ABox::individuals() const {
    std::set<std::string> out;
    for (const auto& a : assertions_) {
        out.insert(a.subject);
        if (!a.is_class() && !a.object.literal) out.insert(a.object.text);
    }
    return out;
}

std::vector<Term> ABox::objects_of(const std::string& subject, const std::string& property) const {
    std::vector<Term> out;
    for (const auto& a : assertions_)
        if (!a.is_class() && a.subject == subject && a.predicate == property)
            out.push_back(a.object);
    return out;
}

std::optional<Term> ABox::object_of(const std::string& subject, const std::string& property) const {
    auto all = objects_of(subject, property);
    if (all.empty()) return std::nullopt;
    return all.front();
}

namespace {

struct Line {
    std::vector<std::string> tokens;
    std::vector<bool> literal_flags;
    std::size_t offset;  // byte offset of line start, for SyntaxError
};

// Splits a line into whitespace-separated tokens; single-quoted literals may
// contain spaces and use \' and \\ escapes.
Line tokenize_line(const std::string& line, std::size_t offset) {
    Line out;
    out.offset = offset;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        if (c == '#') break;
        if (c == '\'') {
            ++i;
            std::string value;
            bool closed = false;
            while (i < line.size()) {
                char q = line[i++];
                if (q == '\\') {
                    if (i >= line.size()) throw SyntaxError(offset + i, "escaped character");
                    value.push_back(line[i++]);
                } else if (q == '\'') {
                    closed = true;
                    break;
                } else {
                    value.push_back(q);
                }
            }
            if (!closed) throw SyntaxError(offset + i, "closing '");
            out.tokens.push_back(std::move(value));
            out.literal_flags.push_back(true);
        } else if (c == '<') {
            // angle-bracketed IRIs may contain '#', which is otherwise a comment
            std::size_t start = i;
            while (i < line.size() && line[i] != '>') ++i;
            if (i < line.size()) ++i;
            out.tokens.push_back(line.substr(start, i - start));
            out.literal_flags.push_back(false);
        } else {
            std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
                   line[i] != '#')
                ++i;
            out.tokens.push_back(line.substr(start, i - start));
            out.literal_flags.push_back(false);
        }
    }
    return out;
}

void check_prefixed(const std::map<std::string, std::string>& prefixes, const std::string& token,
                    std::size_t offset) {
    auto colon = token.find(':');
    if (colon == std::string::npos || colon == 0) return;
    std::string prefix = token.substr(0, colon);
    if (!prefixes.count(prefix)) throw SyntaxError(offset, "declared prefix '" + prefix + "'");
}

}  // namespace

AssertionBlockDoc parse_assertion_block(const std::string& text) {
    AssertionBlockDoc doc;
    doc.prefixes["rdf"] = kRdfPrefix;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string line =
            text.substr(pos, eol == std::string::npos ? std::string::npos : eol - pos);
        Line t = tokenize_line(line, pos);
        if (!t.tokens.empty()) {
            if (t.tokens[0] == "@prefix") {
                if (t.tokens.size() != 3) throw SyntaxError(t.offset, "@prefix <name> <iri>");
                std::string iri = t.tokens[2];
                if (iri.size() >= 2 && iri.front() == '<' && iri.back() == '>')
                    iri = iri.substr(1, iri.size() - 2);
                doc.prefixes[t.tokens[1]] = iri;
            } else if (t.tokens[0] == "@message") {
                if (t.tokens.size() != 2) throw SyntaxError(t.offset, "@message <id>");
                doc.message_id = t.tokens[1];
            } else {
                if (t.tokens.size() != 3)
                    throw SyntaxError(t.offset, "triple: subject predicate object");
                if (t.literal_flags[0] || t.literal_flags[1])
                    throw SyntaxError(t.offset, "identifier in subject/predicate position");
                for (int k = 0; k < 3; ++k)
                    if (!t.literal_flags[k]) check_prefixed(doc.prefixes, t.tokens[k], t.offset);
                if (t.tokens[1] == "rdf:type") {
                    if (t.literal_flags[2]) throw SyntaxError(t.offset, "class name");
                    doc.abox.insert(Assertion::cls(t.tokens[2], t.tokens[0]));
                } else {
                    Term object = t.literal_flags[2] ? Term::lit(t.tokens[2])
                                                    : Term::individual(t.tokens[2]);
                    doc.abox.insert(Assertion::prop(t.tokens[1], t.tokens[0], object));
                }
            }
        }
        if (eol == std::string::npos) break;
        pos = eol + 1;
    }
    return doc;
}

std::string expand_prefixed(const std::map<std::string, std::string>& prefixes,
                            const std::string& token) {
    auto colon = token.find(':');
    if (colon == std::string::npos || colon == 0) return token;
    auto it = prefixes.find(token.substr(0, colon));
    if (it == prefixes.end()) return token;
    return it->second + token.substr(colon + 1);
}

std::string dump_assertion_block(const ABox& abox, const std::optional<std::string>& message_id) {
    std::ostringstream out;
    out << "@prefix rdf <" << kRdfPrefix << ">\n";
    if (message_id) out << "@message " << *message_id << "\n";
    for (const auto& a : abox.assertions()) out << a.to_string() << "\n";
    return out.str();
}

}  // namespace actmed
