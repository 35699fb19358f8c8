#include "minifold/parse.hpp"

#include <algorithm>
#include <cctype>

namespace minifold {

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    const std::vector<std::string>& vars;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) {
        throw parse_error("polynomial parse error at position " + std::to_string(pos) + ": " + what);
    }

    MultiPoly expr() {
        bool neg = eat('-');
        if (!neg) eat('+');
        MultiPoly r = term();
        if (neg) r = -r;
        for (;;) {
            if (eat('+'))
                r += term();
            else if (eat('-'))
                r -= term();
            else
                break;
        }
        return r;
    }

    MultiPoly term() {
        MultiPoly r = factor();
        while (eat('*')) r *= factor();
        return r;
    }

    MultiPoly factor() {
        MultiPoly b = base();
        if (eat('^')) {
            long e = natural();
            b = b.pow(static_cast<unsigned>(e));
        }
        return b;
    }

    MultiPoly base() {
        char c = peek();
        if (c == '(') {
            ++pos;
            MultiPoly r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return MultiPoly::constant(vars, rational());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id = ident();
            if (std::find(vars.begin(), vars.end(), id) == vars.end())
                fail("unknown variable '" + id + "'");
            return MultiPoly::variable(vars, id);
        }
        fail("expected number, variable or '('");
    }

    long natural() {
        skip();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected exponent");
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > 1000000) fail("exponent too large");
            ++pos;
        }
        return v;
    }

    Rational rational() {
        std::string digits;
        skip();
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            digits.push_back(s[pos++]);
        if (digits.empty()) fail("expected number");
        std::size_t save = pos;
        skip();
        if (pos < s.size() && s[pos] == '/') {
            std::size_t slash = pos;
            ++pos;
            skip();
            std::string den;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                den.push_back(s[pos++]);
            if (den.empty()) {
                pos = slash;  // not a fraction after all
            } else {
                return Rational::parse(digits + "/" + den);
            }
        } else {
            pos = save;
        }
        return Rational::parse(digits);
    }

    std::string ident() {
        skip();
        std::string id;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            id.push_back(s[pos++]);
        if (id.empty()) fail("expected identifier");
        return id;
    }
};

}  // namespace

MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& vars) {
    Parser p{text, 0, vars};
    MultiPoly r = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

std::vector<std::string> poly_identifiers(const std::string& text) {
    std::vector<std::string> ids;
    std::size_t i = 0;
    while (i < text.size()) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (std::isalpha(c) || text[i] == '_') {
            std::string id;
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
                id.push_back(text[i++]);
            ids.push_back(id);
        } else {
            ++i;
        }
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

}  // namespace minifold
