#include "actmed/codec.hpp"

#include <cctype>
#include <deque>
#include <map>
#include <set>

#include "actmed/errors.hpp"

namespace actmed::msg {

std::string to_string(Syntax syntax) {
    switch (syntax) {
        case Syntax::FipaAcl: return "fipa-acl";
        case Syntax::Kqml: return "kqml";
        case Syntax::AssertionBlock: return "assertion-block";
    }
    return "fipa-acl";
}

Syntax syntax_from(const std::string& name) {
    if (name == "fipa-acl") return Syntax::FipaAcl;
    if (name == "kqml") return Syntax::Kqml;
    if (name == "assertion-block") return Syntax::AssertionBlock;
    throw UnsupportedSyntax(name);
}

Content Content::empty() { return Content{}; }

Content Content::of_tree(Sexpr tree) {
    Content c;
    c.kind = Kind::Tree;
    c.tree = std::move(tree);
    return c;
}

Content Content::of_assertions(ABox assertions, std::optional<std::string> root) {
    Content c;
    c.kind = Kind::Assertions;
    c.assertions = std::move(assertions);
    c.root = std::move(root);
    return c;
}

std::pair<Envelope, Content> split(const StructuredMessage& msg) {
    return {msg.envelope, msg.content};
}

StructuredMessage join(Envelope envelope, Content content) {
    StructuredMessage msg;
    msg.envelope = std::move(envelope);
    msg.content = std::move(content);
    return msg;
}

namespace {

// ---------------------------------------------------------------- s-expr side

StructuredMessage parse_sexpr_message(const RawMessage& raw) {
    Sexpr tree = parse_sexpr(raw.text);
    if (tree.kind != Sexpr::Kind::List || tree.items.empty() ||
        tree.items[0].kind != Sexpr::Kind::Atom)
        throw SyntaxError(0, "(performative :key value ...)");

    StructuredMessage out;
    out.envelope.performative = tree.items[0].text;
    std::size_t i = 1;
    while (i < tree.items.size()) {
        const Sexpr& key = tree.items[i];
        if (key.kind != Sexpr::Kind::Atom || key.text.empty() || key.text[0] != ':')
            throw SyntaxError(0, "':key' parameter name, got '" + key.to_string() + "'");
        if (i + 1 >= tree.items.size()) throw SyntaxError(0, "value after " + key.text);
        const Sexpr& value = tree.items[i + 1];
        i += 2;

        if (key.text == ":content") {
            if (value.kind == Sexpr::Kind::List && value.items.empty())
                out.content = Content::empty();
            else
                out.content = Content::of_tree(value);
        } else if (key.text == ":sender") {
            out.envelope.sender = value.text;
        } else if (key.text == ":receiver") {
            out.envelope.receiver = value.text;
        } else if (key.text == ":language") {
            out.envelope.language = value.text;
        } else if (key.text == ":reply-with") {
            out.envelope.message_id = value.text;
        } else {
            out.envelope.extra_params[key.text] =
                value.kind == Sexpr::Kind::List ? value.to_string() : value.text;
        }
    }
    if (out.envelope.sender.empty()) throw MissingField("sender");
    if (out.envelope.receiver.empty()) throw MissingField("receiver");
    return out;
}

bool atom_safe(const std::string& text) {
    if (text.empty()) return false;
    for (char c : text)
        if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '\'' ||
            c == ';')
            return false;
    return true;
}

Sexpr atom_or_literal(const std::string& text) {
    return atom_safe(text) ? Sexpr::atom(text) : Sexpr::literal(text);
}

RawMessage serialize_sexpr_message(const StructuredMessage& msg, Syntax syntax) {
    const Envelope& env = msg.envelope;
    if (env.performative.empty()) throw MissingField("performative");
    if (env.sender.empty()) throw MissingField("sender");
    if (env.receiver.empty()) throw MissingField("receiver");

    std::vector<Sexpr> items;
    items.push_back(Sexpr::atom(env.performative));
    items.push_back(Sexpr::atom(":sender"));
    items.push_back(atom_or_literal(env.sender));
    items.push_back(Sexpr::atom(":receiver"));
    items.push_back(atom_or_literal(env.receiver));
    if (!env.language.empty()) {
        items.push_back(Sexpr::atom(":language"));
        items.push_back(atom_or_literal(env.language));
    }
    if (env.message_id) {
        items.push_back(Sexpr::atom(":reply-with"));
        items.push_back(atom_or_literal(*env.message_id));
    }
    switch (msg.content.kind) {
        case Content::Kind::Empty: break;
        case Content::Kind::Tree:
            items.push_back(Sexpr::atom(":content"));
            items.push_back(msg.content.tree);
            break;
        case Content::Kind::Assertions:
            throw UnsupportedSyntax("assertion content in an s-expression message");
    }
    for (const auto& [key, value] : env.extra_params) {
        items.push_back(Sexpr::atom(key));
        Sexpr parsed;
        try {
            parsed = parse_sexpr(value);
        } catch (const SyntaxError&) {
            parsed = atom_or_literal(value);
        }
        items.push_back(std::move(parsed));
    }
    return RawMessage{syntax, Sexpr::list(std::move(items)).to_string()};
}

// ----------------------------------------------------------------- block side

StructuredMessage parse_block_message(const RawMessage& raw) {
    AssertionBlockDoc doc = parse_assertion_block(raw.text);

    std::string root;
    if (doc.message_id) {
        root = *doc.message_id;
    } else {
        std::set<std::string> senders;
        std::set<std::string> holders;
        for (const auto& a : doc.abox.assertions()) {
            if (a.is_class()) continue;
            if (a.predicate == "hasSender") senders.insert(a.subject);
            if (a.predicate == "hasContent") holders.insert(a.subject);
        }
        if (senders.size() == 1)
            root = *senders.begin();
        else if (senders.empty() && holders.size() == 1)
            root = *holders.begin();
        else
            throw AmbiguousRoot("cannot pick a message individual; add an @message marker");
    }

    StructuredMessage out;
    out.envelope.message_id = root;

    std::set<Assertion> consumed;
    auto root_classes = doc.abox.classes_of(root);
    if (root_classes.empty()) throw MissingField("performative");
    out.envelope.performative = root_classes.front();
    consumed.insert(Assertion::cls(root_classes.front(), root));

    auto read_actor = [&](const std::string& property) -> std::string {
        auto actor = doc.abox.object_of(root, property);
        if (!actor) throw MissingField(property == "hasSender" ? "sender" : "receiver");
        consumed.insert(Assertion::prop(property, root, *actor));
        if (actor->literal) return actor->text;
        if (auto name = doc.abox.object_of(actor->text, "hasName"); name && name->literal) {
            consumed.insert(Assertion::prop("hasName", actor->text, *name));
            return name->text;
        }
        return actor->text;
    };
    out.envelope.sender = read_actor("hasSender");
    out.envelope.receiver = read_actor("hasReceiver");
    if (auto lang = doc.abox.object_of(root, "hasLanguage"); lang && lang->literal) {
        out.envelope.language = lang->text;
        consumed.insert(Assertion::prop("hasLanguage", root, *lang));
    }

    ABox rest;
    for (const auto& a : doc.abox.assertions())
        if (!consumed.count(a)) rest.insert(a);
    std::optional<std::string> content_root;
    if (auto c = doc.abox.object_of(root, "hasContent"); c && !c->literal) content_root = c->text;
    if (!rest.empty() || content_root)
        out.content = Content::of_assertions(std::move(rest), std::move(content_root));
    return out;
}

RawMessage serialize_block_message(const StructuredMessage& msg) {
    const Envelope& env = msg.envelope;
    if (env.performative.empty()) throw MissingField("performative");
    if (!env.extra_params.empty())
        throw UnsupportedSyntax("extra envelope parameters have no assertion-block form");
    if (msg.content.kind == Content::Kind::Tree)
        throw UnsupportedSyntax("expression content in an assertion-block message");

    std::string root = env.message_id.value_or("Message01");
    ABox out;
    if (msg.content.kind == Content::Kind::Assertions) out = msg.content.assertions;
    out.insert(Assertion::cls(env.performative, root));
    int actor_no = 0;
    auto write_actor = [&](const std::string& property, const std::string& name) {
        ++actor_no;
        if (name.empty()) return;
        std::string id = "Actor0" + std::to_string(actor_no);
        out.insert(Assertion::prop(property, root, Term::individual(id)));
        out.insert(Assertion::prop("hasName", id, Term::lit(name)));
    };
    write_actor("hasSender", env.sender);
    write_actor("hasReceiver", env.receiver);
    if (!env.language.empty())
        out.insert(Assertion::prop("hasLanguage", root, Term::lit(env.language)));
    return RawMessage{Syntax::AssertionBlock, dump_assertion_block(out, root)};
}

// -------------------------------------------------------------- abox mapping

class IdGen {
public:
    std::string fresh(const std::string& prefix) {
        int n = ++counters_[prefix];
        return prefix + (n < 10 ? "0" : "") + std::to_string(n);
    }

private:
    std::map<std::string, int> counters_;
};

std::string translate_wff(const Sexpr& wff, const TranslatorProfile& profile, IdGen& ids,
                          ABox& out) {
    if (wff.kind != Sexpr::Kind::List || wff.items.empty() ||
        wff.items[0].kind != Sexpr::Kind::Atom)
        throw UnmappedConstruct(wff.to_string());
    const PredicateRule* rule = profile.predicate_named(wff.items[0].text);
    if (!rule) throw UnmappedConstruct(wff.items[0].text);
    std::string ind = ids.fresh(rule->prefix);
    out.insert(Assertion::cls(rule->cls, ind));
    std::size_t arg_no = 0;
    for (std::size_t i = 1; i < wff.items.size(); ++i) {
        const Sexpr& arg = wff.items[i];
        if (arg.kind == Sexpr::Kind::Atom && !arg.text.empty() && arg.text[0] == '?')
            continue;  // bound variable
        if (arg.kind == Sexpr::Kind::List)
            throw UnmappedConstruct(arg.to_string());
        if (arg_no >= rule->arg_props.size())
            throw UnmappedConstruct("argument " + arg.text + " of " + rule->name);
        Term object = arg.kind == Sexpr::Kind::Literal ? Term::lit(arg.text)
                                                       : Term::individual(arg.text);
        out.insert(Assertion::prop(rule->arg_props[arg_no], ind, object));
        ++arg_no;
    }
    return ind;
}

std::string translate_expr(const Sexpr& expr, const TranslatorProfile& profile, IdGen& ids,
                           ABox& out) {
    if (expr.kind != Sexpr::Kind::List || expr.items.empty() ||
        expr.items[0].kind != Sexpr::Kind::Atom)
        throw UnmappedConstruct(expr.to_string());
    const std::string& op = expr.items[0].text;
    if (const ConstructRule* rule = profile.construct_named(op)) {
        std::string ind = ids.fresh(rule->prefix);
        out.insert(Assertion::cls(rule->cls, ind));
        for (std::size_t i = 1; i < expr.items.size(); ++i) {
            const Sexpr& item = expr.items[i];
            if (item.kind == Sexpr::Kind::Atom && !item.text.empty() && item.text[0] == '?')
                continue;
            std::string wff_ind = translate_wff(item, profile, ids, out);
            out.insert(Assertion::prop(rule->link, ind, Term::individual(wff_ind)));
        }
        return ind;
    }
    if (profile.predicate_named(op)) return translate_wff(expr, profile, ids, out);
    throw UnmappedConstruct(op);
}

}  // namespace

StructuredMessage parse(const RawMessage& raw) {
    if (raw.text.empty()) throw SyntaxError(0, "non-empty message text");
    switch (raw.syntax) {
        case Syntax::FipaAcl:
        case Syntax::Kqml: return parse_sexpr_message(raw);
        case Syntax::AssertionBlock: return parse_block_message(raw);
    }
    throw UnsupportedSyntax("unknown syntax tag");
}

RawMessage serialize(const StructuredMessage& msg, Syntax syntax) {
    switch (syntax) {
        case Syntax::FipaAcl:
        case Syntax::Kqml: return serialize_sexpr_message(msg, syntax);
        case Syntax::AssertionBlock: return serialize_block_message(msg);
    }
    throw UnsupportedSyntax("unknown syntax tag");
}

ABox to_abox(const StructuredMessage& msg, const TranslatorProfile& profile) {
    const Envelope& env = msg.envelope;
    const PerformativeRule* rule = profile.performative_named(env.performative);
    if (!rule) throw UnmappedConstruct(env.performative);

    ABox out;
    IdGen ids;
    const std::string root = env.message_id.value_or("Message01");
    out.insert(Assertion::cls(rule->act_class, root));
    for (const auto& [property, object] : rule->asserts)
        out.insert(Assertion::prop(property, root, object));

    auto write_actor = [&](const std::string& property, const std::string& name) {
        std::string id = ids.fresh(profile.actor_prefix);
        if (name.empty()) return;
        out.insert(Assertion::prop(property, root, Term::individual(id)));
        out.insert(Assertion::prop("hasName", id, Term::lit(name)));
    };
    write_actor("hasSender", env.sender);
    write_actor("hasReceiver", env.receiver);
    if (!env.language.empty())
        out.insert(Assertion::prop("hasLanguage", root, Term::lit(env.language)));
    for (const auto& [key, value] : env.extra_params) {
        auto it = profile.params.find(key);
        if (it == profile.params.end()) throw UnmappedConstruct(key);
        out.insert(Assertion::prop(it->second, root, Term::lit(value)));
    }

    switch (msg.content.kind) {
        case Content::Kind::Empty: break;
        case Content::Kind::Assertions: out.merge(msg.content.assertions); break;
        case Content::Kind::Tree: {
            const Sexpr* expr = &msg.content.tree;
            if (expr->kind == Sexpr::Kind::List && expr->items.size() == 1 &&
                expr->items[0].kind == Sexpr::Kind::List)
                expr = &expr->items[0];
            std::string content_ind = translate_expr(*expr, profile, ids, out);
            if (rule->wrap_class) {
                std::string wrapper = ids.fresh(rule->wrap_prefix);
                out.insert(Assertion::cls(*rule->wrap_class, wrapper));
                out.insert(Assertion::prop("hasContent", root, Term::individual(wrapper)));
                out.insert(Assertion::prop(rule->wrap_link, wrapper,
                                           Term::individual(content_ind)));
            } else {
                out.insert(Assertion::prop("hasContent", root, Term::individual(content_ind)));
            }
            break;
        }
    }
    return out;
}

namespace {

Content block_content(const ABox& abox, const TranslatorProfile& profile, const std::string& root,
                      const std::string& content_root) {
    ABox bucket;
    bucket.insert(Assertion::prop("hasContent", root, Term::individual(content_root)));
    std::set<std::string> visited{content_root};
    std::deque<std::string> queue{content_root};
    while (!queue.empty()) {
        std::string x = queue.front();
        queue.pop_front();
        for (const auto& a : abox.assertions()) {
            if (a.subject != x) continue;
            if (a.is_class()) {
                if (profile.vocab.empty() || profile.vocab.count(a.predicate)) bucket.insert(a);
            } else {
                bucket.insert(a);
                if (!a.object.literal && visited.insert(a.object.text).second)
                    queue.push_back(a.object.text);
            }
        }
    }
    return Content::of_assertions(std::move(bucket), content_root);
}

Sexpr inverse_wff(const ABox& abox, const TranslatorProfile& profile, const std::string& ind,
                  const std::string& var) {
    const PredicateRule* rule = nullptr;
    for (const auto& candidate : profile.predicates)
        if (abox.contains(Assertion::cls(candidate.cls, ind))) {
            rule = &candidate;
            break;
        }
    if (!rule) throw UnmappedConstruct("no predicate rule classifies " + ind);
    std::vector<Sexpr> items{Sexpr::atom(rule->name), Sexpr::atom(var)};
    for (const auto& property : rule->arg_props) {
        auto object = abox.object_of(ind, property);
        if (!object) continue;
        items.push_back(object->literal ? Sexpr::literal(object->text)
                                        : atom_or_literal(object->text));
    }
    return Sexpr::list(std::move(items));
}

Content tree_content(const ABox& abox, const TranslatorProfile& profile,
                     const PerformativeRule& rule, const std::string& content_ind) {
    std::string expr_ind = content_ind;
    if (rule.wrap_class) {
        if (!abox.contains(Assertion::cls(*rule.wrap_class, content_ind)))
            throw UnmappedConstruct("content of " + rule.name + " is not a " + *rule.wrap_class);
        auto linked = abox.object_of(content_ind, rule.wrap_link);
        if (!linked || linked->literal) throw UnmappedConstruct(rule.wrap_link);
        expr_ind = linked->text;
    }
    const ConstructRule* construct = nullptr;
    for (const auto& candidate : profile.constructs)
        if (abox.contains(Assertion::cls(candidate.cls, expr_ind))) {
            construct = &candidate;
            break;
        }
    if (!construct) throw UnmappedConstruct("no construct rule classifies " + expr_ind);
    auto wff = abox.object_of(expr_ind, construct->link);
    if (!wff || wff->literal) throw UnmappedConstruct(construct->link);
    Sexpr expr = Sexpr::list({Sexpr::atom(construct->op), Sexpr::atom(construct->var),
                              inverse_wff(abox, profile, wff->text, construct->var)});
    return Content::of_tree(Sexpr::list({std::move(expr)}));
}

}  // namespace

StructuredMessage from_abox(const ABox& abox, const TranslatorProfile& profile,
                            const onto::Ontology* ontology) {
    std::set<std::string> roots;
    for (const auto& a : abox.assertions())
        if (a.is_class() && profile.is_message_class(a.predicate)) roots.insert(a.subject);
    if (roots.size() != 1)
        throw AmbiguousRoot(std::to_string(roots.size()) + " message-class individuals");
    const std::string root = *roots.begin();

    std::set<std::string> candidates;
    for (const auto& cls : abox.classes_of(root))
        if (profile.is_message_class(cls)) candidates.insert(cls);
    if (ontology) candidates = ontology->most_specific(candidates);
    const PerformativeRule* rule = nullptr;
    for (const auto& cls : candidates)
        if ((rule = profile.performative_for_class(cls))) break;
    if (!rule) throw UnmappedConstruct(*candidates.begin());

    StructuredMessage out;
    out.envelope.performative = rule->name;
    out.envelope.message_id = root;
    auto read_actor = [&](const std::string& property) -> std::string {
        auto actor = abox.object_of(root, property);
        if (!actor) return "";
        if (actor->literal) return actor->text;
        if (auto name = abox.object_of(actor->text, "hasName"); name && name->literal)
            return name->text;
        return actor->text;
    };
    out.envelope.sender = read_actor("hasSender");
    out.envelope.receiver = read_actor("hasReceiver");
    if (auto lang = abox.object_of(root, "hasLanguage"); lang && lang->literal)
        out.envelope.language = lang->text;
    else
        out.envelope.language = profile.default_language;
    for (const auto& [key, property] : profile.params)
        if (auto value = abox.object_of(root, property); value && value->literal)
            out.envelope.extra_params[key] = value->text;

    auto content = abox.object_of(root, "hasContent");
    if (content && !content->literal) {
        if (profile.syntax == Syntax::AssertionBlock)
            out.content = block_content(abox, profile, root, content->text);
        else
            out.content = tree_content(abox, profile, *rule, content->text);
    }
    return out;
}

}  // namespace actmed::msg
