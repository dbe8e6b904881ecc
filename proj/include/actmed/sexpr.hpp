#pragma once

#include <string>
#include <vector>

namespace actmed {

/// S-expression tree: atoms, single-quoted literals and parenthesized lists.
/// This is the concrete syntax of both envelope-style agent messages and the
/// content-language subset; `;` starts a line comment.
struct Sexpr {
    enum class Kind { Atom, Literal, List };

    Kind kind = Kind::List;
    std::string text;          // Atom / Literal payload
    std::vector<Sexpr> items;  // List children

    static Sexpr atom(std::string t);
    static Sexpr literal(std::string t);
    static Sexpr list(std::vector<Sexpr> items = {});

    bool is_atom() const { return kind == Kind::Atom; }
    bool is_literal() const { return kind == Kind::Literal; }
    bool is_list() const { return kind == Kind::List; }

    bool operator==(const Sexpr& other) const;

    std::string to_string() const;
};

/// Parses exactly one expression; trailing whitespace/comments are allowed.
/// Throws SyntaxError (with byte offset) on malformed input.
Sexpr parse_sexpr(const std::string& text);

}  // namespace actmed
