#include "ci2/parse.hpp"

#include <cctype>

namespace ci2 {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    char take() {
        skip_ws();
        if (i >= s.size()) throw ParseError(i, "unexpected end of input");
        return s[i++];
    }
    long integer() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw ParseError(start, "expected a number");
        return std::stol(s.substr(start, i - start));
    }
};

} // namespace

PolyAst parse_poly_text(const std::string& text) {
    PolyAst ast;
    Cursor c{text};
    bool first = true;
    while (!c.done()) {
        long sign = 1;
        char op = c.peek();
        if (op == '+' || op == '-') {
            c.take();
            if (op == '-') sign = -1;
        } else if (!first) {
            throw ParseError(c.i, "expected + or - between terms");
        }
        first = false;

        PolyTerm term;
        term.coef = Rat(sign, 1);
        bool saw_factor = false;
        bool expect_factor = true;
        while (expect_factor) {
            c.skip_ws();
            char ch = c.peek();
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                long num = c.integer();
                long den = 1;
                if (c.peek() == '/') {
                    c.take();
                    den = c.integer();
                    if (den == 0) throw ParseError(c.i, "zero denominator");
                }
                term.coef *= Rat(num, den);
                saw_factor = true;
            } else if (ch == 'X') {
                c.take();
                long idx = c.integer();
                long exp = 1;
                if (c.peek() == '^') {
                    c.take();
                    exp = c.integer();
                }
                term.xexp[static_cast<int>(idx)] += static_cast<int>(exp);
                ast.max_var = std::max(ast.max_var, static_cast<int>(idx));
                saw_factor = true;
            } else if (ch == 't') {
                c.take();
                long exp = 1;
                if (c.peek() == '^') {
                    c.take();
                    exp = c.integer();
                }
                term.texp += static_cast<int>(exp);
                saw_factor = true;
            } else {
                throw ParseError(c.i, "expected a coefficient, X<k> or t");
            }
            // optional * continues the term
            if (c.peek() == '*') {
                c.take();
                expect_factor = true;
            } else {
                expect_factor = false;
            }
        }
        if (!saw_factor) throw ParseError(c.i, "empty term");
        ast.terms.push_back(term);
    }
    if (ast.terms.empty()) throw ParseError(0, "empty polynomial");
    return ast;
}

std::string print_grammar_terms(const std::vector<std::tuple<std::string, int, std::string>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [coef, texp, mono] : terms) {
        std::string c = coef;
        bool neg = !c.empty() && c[0] == '-';
        if (neg) c = c.substr(1);
        std::string body;
        bool coef_is_one = (c == "1");
        if (!coef_is_one || (texp == 0 && mono.empty())) body = c;
        if (texp > 0) {
            if (!body.empty()) body += "*";
            body += "t" + (texp > 1 ? "^" + std::to_string(texp) : std::string());
        }
        if (!mono.empty()) {
            if (!body.empty()) body += "*";
            body += mono;
        }
        if (out.empty()) {
            out = (neg ? "-" : "") + body;
        } else {
            out += (neg ? " - " : " + ") + body;
        }
    }
    return out;
}

} // namespace ci2
