#include "actmed/profile.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "actmed/errors.hpp"

namespace actmed::msg {

const PerformativeRule* TranslatorProfile::performative_named(const std::string& name) const {
    for (const auto& rule : performatives)
        if (rule.name == name) return &rule;
    return nullptr;
}

const PerformativeRule* TranslatorProfile::performative_for_class(const std::string& cls) const {
    for (const auto& rule : performatives)
        if (rule.act_class == cls) return &rule;
    return nullptr;
}

const ConstructRule* TranslatorProfile::construct_named(const std::string& op) const {
    for (const auto& rule : constructs)
        if (rule.op == op) return &rule;
    return nullptr;
}

const ConstructRule* TranslatorProfile::construct_for_class(const std::string& cls) const {
    for (const auto& rule : constructs)
        if (rule.cls == cls) return &rule;
    return nullptr;
}

const PredicateRule* TranslatorProfile::predicate_named(const std::string& name) const {
    for (const auto& rule : predicates)
        if (rule.name == name) return &rule;
    return nullptr;
}

const PredicateRule* TranslatorProfile::predicate_for_class(const std::string& cls) const {
    for (const auto& rule : predicates)
        if (rule.cls == cls) return &rule;
    return nullptr;
}

bool TranslatorProfile::is_message_class(const std::string& cls) const {
    for (const auto& name : message_classes)
        if (name == cls) return true;
    return false;
}

namespace {

// Whitespace-separated tokens; single-quoted tokens keep their quotes so the
// caller can tell literals from names.
std::vector<std::string> tokenize_line(const std::string& line, int line_no) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '\'') {
            std::size_t start = i++;
            while (i < line.size() && line[i] != '\'') {
                if (line[i] == '\\') ++i;
                ++i;
            }
            if (i >= line.size())
                throw SyntaxError(line_no, "closing quote");
            ++i;
            out.push_back(line.substr(start, i - start));
        } else {
            std::size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            out.push_back(line.substr(start, i - start));
        }
    }
    return out;
}

Term term_from_token(const std::string& token) {
    if (token.size() >= 2 && token.front() == '\'' && token.back() == '\'') {
        std::string body;
        for (std::size_t i = 1; i + 1 < token.size(); ++i) {
            if (token[i] == '\\' && i + 2 < token.size()) ++i;
            body += token[i];
        }
        return Term::lit(body);
    }
    return Term::individual(token);
}

}  // namespace

TranslatorProfile parse_profile(const std::string& text) {
    TranslatorProfile profile;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        auto hash = raw.find('#');
        std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
        auto toks = tokenize_line(line, line_no);
        if (toks.empty()) continue;
        const std::string& head = toks[0];

        auto need = [&](std::size_t n) {
            if (toks.size() < n) throw SyntaxError(line_no, "more tokens on '" + head + "' line");
        };

        if (head == "syntax") {
            need(2);
            profile.syntax = syntax_from(toks[1]);
        } else if (head == "language") {
            need(2);
            profile.default_language = toks[1];
        } else if (head == "actor-prefix") {
            need(2);
            profile.actor_prefix = toks[1];
        } else if (head == "message-class") {
            need(2);
            profile.message_classes.push_back(toks[1]);
        } else if (head == "vocab") {
            need(2);
            profile.vocab.insert(toks[1]);
        } else if (head == "param") {
            need(4);
            if (toks[2] != "property") throw SyntaxError(line_no, "'property'");
            profile.params[toks[1]] = toks[3];
        } else if (head == "performative") {
            need(2);
            PerformativeRule rule;
            rule.name = toks[1];
            rule.act_class = toks[1];
            std::size_t i = 2;
            while (i < toks.size()) {
                const std::string& key = toks[i];
                if (key == "class") {
                    need(i + 2);
                    rule.act_class = toks[i + 1];
                    i += 2;
                } else if (key == "wrap") {
                    need(i + 2);
                    rule.wrap_class = toks[i + 1];
                    i += 2;
                } else if (key == "prefix") {
                    need(i + 2);
                    rule.wrap_prefix = toks[i + 1];
                    i += 2;
                } else if (key == "link") {
                    need(i + 2);
                    rule.wrap_link = toks[i + 1];
                    i += 2;
                } else if (key == "assert") {
                    need(i + 3);
                    rule.asserts.emplace_back(toks[i + 1], term_from_token(toks[i + 2]));
                    i += 3;
                } else {
                    throw SyntaxError(line_no, "performative clause, got '" + key + "'");
                }
            }
            if (rule.wrap_class && (rule.wrap_prefix.empty() || rule.wrap_link.empty()))
                throw MissingField("prefix/link on wrapped performative " + rule.name);
            profile.performatives.push_back(std::move(rule));
        } else if (head == "construct") {
            need(2);
            ConstructRule rule;
            rule.op = toks[1];
            rule.var = "?x";
            std::size_t i = 2;
            while (i < toks.size()) {
                const std::string& key = toks[i];
                need(i + 2);
                if (key == "class")
                    rule.cls = toks[i + 1];
                else if (key == "prefix")
                    rule.prefix = toks[i + 1];
                else if (key == "link")
                    rule.link = toks[i + 1];
                else if (key == "var")
                    rule.var = toks[i + 1];
                else
                    throw SyntaxError(line_no, "construct clause, got '" + key + "'");
                i += 2;
            }
            if (rule.cls.empty() || rule.prefix.empty() || rule.link.empty())
                throw MissingField("class/prefix/link on construct " + rule.op);
            profile.constructs.push_back(std::move(rule));
        } else if (head == "predicate") {
            need(2);
            PredicateRule rule;
            rule.name = toks[1];
            std::size_t i = 2;
            while (i < toks.size()) {
                const std::string& key = toks[i];
                if (key == "class") {
                    need(i + 2);
                    rule.cls = toks[i + 1];
                    i += 2;
                } else if (key == "prefix") {
                    need(i + 2);
                    rule.prefix = toks[i + 1];
                    i += 2;
                } else if (key == "args") {
                    for (++i; i < toks.size(); ++i) rule.arg_props.push_back(toks[i]);
                } else {
                    throw SyntaxError(line_no, "predicate clause, got '" + key + "'");
                }
            }
            if (rule.cls.empty() || rule.prefix.empty())
                throw MissingField("class/prefix on predicate " + rule.name);
            profile.predicates.push_back(std::move(rule));
        } else {
            throw SyntaxError(line_no, "profile directive, got '" + head + "'");
        }
    }
    return profile;
}

TranslatorProfile load_profile(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open profile file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_profile(buf.str());
}

}  // namespace actmed::msg
