#include "repzeta/io.hpp"

#include <cctype>
#include <sstream>

namespace repzeta {

namespace {

void append_term(std::ostringstream& out, bool first, const Monomial& m, const Int& c) {
    Int a = c < 0 ? Int(-c) : c;
    if (first) {
        if (c < 0) out << "-";
    } else {
        out << (c < 0 ? " - " : " + ");
    }
    bool has_vars = m != monomial_one();
    if (a != 1 || !has_vars) {
        out << a.get_str();
        if (has_vars) out << "*";
    }
    bool first_var = true;
    for (int i = 0; i < kNumVars; ++i) {
        if (m[i] == 0) continue;
        if (!first_var) out << "*";
        first_var = false;
        out << kVarNames[i];
        if (m[i] != 1) out << "^" << m[i];
    }
}

} // namespace

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        append_term(out, first, m, c);
        first = false;
    }
    return out.str();
}

std::string to_string(const RatFun& f) {
    if (f.den().is_one()) return to_string(f.num());
    return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what);
    }

    RatFun expression() {
        RatFun acc = eat('-') ? -term() : term();
        for (;;) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }

    RatFun term() {
        RatFun acc = factor();
        for (;;) {
            if (eat('*'))
                acc *= factor();
            else if (eat('/'))
                acc /= factor();
            else
                return acc;
        }
    }

    RatFun factor() {
        RatFun base = atom();
        if (eat('^')) {
            bool neg = eat('-');
            int e = integer();
            return base.pow(neg ? -e : e);
        }
        return base;
    }

    RatFun atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            RatFun inner = expression();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (c == '-') {
            ++pos;
            return -atom();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return RatFun(Int(number()));
        if (std::isalpha(static_cast<unsigned char>(c))) {
            ++pos;
            auto v = var_from_name(std::string(1, c));
            if (!v) fail(std::string("unknown variable '") + c + "'");
            return RatFun::variable(*v);
        }
        fail("unexpected character");
    }

    int integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected an integer");
        return std::stoi(s.substr(start, pos - start));
    }

    std::string number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        return s.substr(start, pos - start);
    }
};

} // namespace

RatFun parse_ratfun(const std::string& text) {
    Parser p(text);
    RatFun r = p.expression();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

Poly parse_poly(const std::string& text) { return parse_ratfun(text).as_poly(); }

} // namespace repzeta
