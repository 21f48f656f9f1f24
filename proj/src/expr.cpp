#include "structalg/expr.hpp"

#include <cctype>

#include "structalg/errors.hpp"

namespace structalg {

namespace {

struct Parser {
    const std::string& s;
    const ExprEnv& env;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    GQ parse_expr() {
        GQ v = parse_term();
        while (true) {
            if (eat('+'))
                v += parse_term();
            else if (eat('-'))
                v -= parse_term();
            else
                return v;
        }
    }

    GQ parse_term() {
        GQ v = parse_factor();
        while (true) {
            if (eat('*'))
                v *= parse_factor();
            else if (eat('/'))
                v /= parse_factor();
            else
                return v;
        }
    }

    GQ parse_factor() {
        if (eat('-')) return -parse_factor();
        if (eat('+')) return parse_factor();
        GQ base = parse_primary();
        if (eat('^')) {
            long e = parse_integer();
            if (e < 0) throw ParseError("negative exponent in '" + s + "'");
            GQ r(1);
            for (long k = 0; k < e; ++k) r *= base;
            return r;
        }
        return base;
    }

    long parse_integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected integer in '" + s + "'");
        return std::stol(s.substr(start, pos - start));
    }

    GQ parse_primary() {
        skip_ws();
        if (eat('(')) {
            GQ v = parse_expr();
            if (!eat(')')) throw ParseError("missing ')' in '" + s + "'");
            return v;
        }
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long n = parse_integer();
            return GQ(n);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            if (name == "i") return GQ::i();
            auto it = env.find(name);
            if (it == env.end()) throw ParseError("unbound identifier '" + name + "'");
            return it->second;
        }
        throw ParseError("unexpected character in '" + s + "'");
    }
};

}  // namespace

GQ eval_expr(const std::string& text, const ExprEnv& env) {
    Parser p{text, env};
    GQ v = p.parse_expr();
    if (!p.done()) throw ParseError("trailing input in '" + text + "'");
    return v;
}

}  // namespace structalg
