#include "actmed/sexpr.hpp"

#include <sstream>

#include "actmed/errors.hpp"

namespace actmed {

Sexpr Sexpr::atom(std::string t) {
    Sexpr e;
    e.kind = Kind::Atom;
    e.text = std::move(t);
    return e;
}

Sexpr Sexpr::literal(std::string t) {
    Sexpr e;
    e.kind = Kind::Literal;
    e.text = std::move(t);
    return e;
}

Sexpr Sexpr::list(std::vector<Sexpr> items) {
    Sexpr e;
    e.kind = Kind::List;
    e.items = std::move(items);
    return e;
}

bool Sexpr::operator==(const Sexpr& other) const {
    if (kind != other.kind) return false;
    if (kind == Kind::List) return items == other.items;
    return text == other.text;
}

std::string Sexpr::to_string() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::Atom:
            out << text;
            break;
        case Kind::Literal: {
            out << '\'';
            for (char c : text) {
                if (c == '\'' || c == '\\') out << '\\';
                out << c;
            }
            out << '\'';
            break;
        }
        case Kind::List: {
            out << '(';
            bool first = true;
            for (const auto& item : items) {
                if (!first) out << ' ';
                first = false;
                out << item.to_string();
            }
            out << ')';
            break;
        }
    }
    return out.str();
}

namespace {

class Reader {
public:
    explicit Reader(const std::string& text) : text_(text) {}

    Sexpr read_one() {
        skip_space();
        Sexpr e = read_expr();
        skip_space();
        if (pos_ != text_.size()) throw SyntaxError(pos_, "end of input");
        return e;
    }

private:
    void skip_space() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == ';') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                ++pos_;
            } else {
                break;
            }
        }
    }

    static bool is_atom_char(char c) {
        return c != '(' && c != ')' && c != '\'' && c != ';' && c != ' ' && c != '\t' &&
               c != '\r' && c != '\n';
    }

    Sexpr read_expr() {
        if (pos_ >= text_.size()) throw SyntaxError(pos_, "expression");
        char c = text_[pos_];
        if (c == '(') return read_list();
        if (c == '\'') return read_literal();
        if (c == ')') throw SyntaxError(pos_, "expression");
        return read_atom();
    }

    Sexpr read_list() {
        ++pos_;  // consume '('
        std::vector<Sexpr> items;
        while (true) {
            skip_space();
            if (pos_ >= text_.size()) throw SyntaxError(pos_, "')'");
            if (text_[pos_] == ')') {
                ++pos_;
                return Sexpr::list(std::move(items));
            }
            items.push_back(read_expr());
        }
    }

    Sexpr read_literal() {
        ++pos_;  // consume opening quote
        std::string value;
        while (true) {
            if (pos_ >= text_.size()) throw SyntaxError(pos_, "closing '");
            char c = text_[pos_++];
            if (c == '\\') {
                if (pos_ >= text_.size()) throw SyntaxError(pos_, "escaped character");
                value.push_back(text_[pos_++]);
            } else if (c == '\'') {
                return Sexpr::literal(std::move(value));
            } else {
                value.push_back(c);
            }
        }
    }

    Sexpr read_atom() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_atom_char(text_[pos_])) ++pos_;
        return Sexpr::atom(text_.substr(start, pos_ - start));
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

Sexpr parse_sexpr(const std::string& text) { return Reader(text).read_one(); }

}  // namespace actmed
