#include "series_text.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "errors.hpp"

namespace k3web {

std::string product_factor_string(std::vector<int> exponents) {
    if (exponents.empty()) return "1";
    std::sort(exponents.begin(), exponents.end());
    std::map<int, int> runs;
    for (int e : exponents) runs[e]++;
    std::ostringstream out;
    for (const auto& [e, m] : runs) {
        out << "(1-t";
        if (e != 1) out << "^" << e;
        out << ")";
        if (m != 1) out << "^" << m;
    }
    return out.str();
}

std::string product_form_string(std::vector<int> numer_exponents, std::vector<int> denom_exponents) {
    return product_factor_string(std::move(numer_exponents)) + "/" +
           product_factor_string(std::move(denom_exponents));
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw parse_error("series expression: " + msg + " at position " + std::to_string(pos) +
                          " in \"" + s + "\"");
    }

    bool starts_factor() {
        char c = peek();
        return c == '(' || c == 't' || std::isdigit(static_cast<unsigned char>(c));
    }

    long parse_integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return std::stol(s.substr(start, pos - start));
    }

    RationalFunction parse_primary() {
        char c = peek();
        if (c == '(') {
            ++pos;
            RationalFunction e = parse_expr();
            if (peek() != ')') fail("expected ')'");
            ++pos;
            return e;
        }
        if (c == 't') {
            ++pos;
            return RationalFunction(Polynomial::monomial(1, 1));
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return RationalFunction(Polynomial::constant(parse_integer()));
        fail("expected '(', 't' or integer");
    }

    RationalFunction parse_factor() {
        RationalFunction base = parse_primary();
        if (peek() == '^') {
            ++pos;
            long e = parse_integer();
            RationalFunction acc = RationalFunction::one();
            for (long i = 0; i < e; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    RationalFunction parse_term() {
        RationalFunction acc = parse_factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos;
                acc = acc * parse_factor();
            } else if (c == '/') {
                ++pos;
                acc = acc / parse_factor();
            } else if (starts_factor()) {
                acc = acc * parse_factor();  // implicit multiplication
            } else {
                return acc;
            }
        }
    }

    RationalFunction parse_expr() {
        bool neg = false;
        if (peek() == '-') {
            ++pos;
            neg = true;
        } else if (peek() == '+') {
            ++pos;
        }
        RationalFunction acc = parse_term();
        if (neg) acc = -acc;
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos;
                acc = acc + parse_term();
            } else if (c == '-') {
                ++pos;
                acc = acc - parse_term();
            } else {
                return acc;
            }
        }
    }
};

}  // namespace

RationalFunction parse_rational_function(const std::string& text) {
    Parser p(text);
    RationalFunction r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return r.canonical();
}

}  // namespace k3web
