#include "forge/parse.hpp"

#include <cctype>
#include <cstdlib>

#include "forge/errors.hpp"

namespace forge {

namespace {

struct Lexer {
    std::string s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char get() {
        skip_ws();
        if (pos >= s.size()) throw ParseError("unexpected end of input in '" + s + "'");
        return s[pos++];
    }
    void expect(char c) {
        char g = get();
        if (g != c) throw ParseError(std::string("expected '") + c + "', got '" + g + "' in '" + s + "'");
    }
    long integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            throw ParseError("expected integer at position " + std::to_string(start) + " in '" + s + "'");
        return std::strtol(s.c_str() + start, nullptr, 10);
    }
    std::string digits() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected digits in '" + s + "'");
        return s.substr(start, pos - start);
    }
};

struct Parser {
    Lexer lex;
    Tower tw;
    bool allow_t;

    FElem parse_expr() {
        FElem acc = parse_term();
        while (true) {
            char c = lex.peek();
            if (c == '+') {
                lex.get();
                acc = acc + parse_term();
            } else if (c == '-') {
                lex.get();
                acc = acc - parse_term();
            } else {
                return acc;
            }
        }
    }

    FElem parse_term() {
        FElem acc = parse_factor();
        while (true) {
            char c = lex.peek();
            if (c == '*') {
                lex.get();
                acc = acc * parse_factor();
            } else if (c == '/') {
                lex.get();
                FElem d = parse_factor();
                if (d.is_zero()) throw DivisionByZero("division by zero in expression");
                acc = acc * d.invert_homogeneous();
            } else {
                return acc;
            }
        }
    }

    FElem parse_factor() {
        char c = lex.peek();
        if (c == '-') {
            lex.get();
            return -parse_factor();
        }
        FElem base = parse_base();
        if (lex.peek() == '^') {
            lex.get();
            long e = lex.integer();
            FElem one(tw, RatFunc(tw.nvars(), Rat(1)), 0);
            FElem acc = one;
            FElem b = e < 0 ? base.invert_homogeneous() : base;
            for (long k = 0; k < (e < 0 ? -e : e); ++k) acc = acc * b;
            return acc;
        }
        return base;
    }

    FElem parse_base() {
        char c = lex.peek();
        if (c == '(') {
            lex.get();
            FElem e = parse_expr();
            lex.expect(')');
            return e;
        }
        if (c == 'x') {
            lex.get();
            long idx = std::strtol(lex.digits().c_str(), nullptr, 10);
            if (idx < 1 || idx > tw.nvars())
                throw ParseError("variable x" + std::to_string(idx) + " out of range (have x1..x" +
                                 std::to_string(tw.nvars()) + ")");
            return FElem::variable(tw, static_cast<int>(idx) - 1);
        }
        if (c == 't') {
            lex.get();
            if (!allow_t) throw ParseError("'t' not allowed in a K-expression");
            return FElem::t_power(tw, 1);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = lex.digits();
            if (lex.peek() == '/') {
                // lookahead: rational literal p/q only when q is a bare integer;
                // otherwise leave '/' to the term parser
                std::size_t save = lex.pos;
                lex.get();
                if (std::isdigit(static_cast<unsigned char>(lex.peek()))) {
                    std::string den = lex.digits();
                    return FElem(tw, RatFunc(tw.nvars(), rat_from_string(num + "/" + den)), 0);
                }
                lex.pos = save;
            }
            return FElem(tw, RatFunc(tw.nvars(), rat_from_string(num)), 0);
        }
        throw ParseError(std::string("unexpected character '") + c + "' in '" + lex.s + "'");
    }
};

}  // namespace

FElem parse_felem(const Tower& tw, const std::string& text) {
    Parser p{Lexer{text}, tw, true};
    FElem e = p.parse_expr();
    if (!p.lex.eof()) throw ParseError("trailing input in '" + text + "'");
    return e;
}

RatFunc parse_ratfunc(int nvars, const std::string& text) {
    Tower tw{nvars - 1};
    Parser p{Lexer{text}, tw, false};
    FElem e = p.parse_expr();
    if (!p.lex.eof()) throw ParseError("trailing input in '" + text + "'");
    if (e.is_zero()) return RatFunc(nvars);
    return e.coeff_at(0);
}

}  // namespace forge
