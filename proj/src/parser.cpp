#include "tutteq/parser.hpp"

#include <cctype>
#include <sstream>

namespace tq {

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    explicit Lexer(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw parse_error(std::string("expected '") + c + "'", pos);
    }
    mpz_class integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw parse_error("expected integer", pos);
        return mpz_class(s.substr(start, pos - start));
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }
};

struct Parser {
    Lexer lex;
    const std::vector<std::string>& vars;

    Parser(const std::string& text, const std::vector<std::string>& variables)
        : lex(text), vars(variables) {
        if (vars.size() > 2)
            throw parse_error("at most two variables supported", 0);
    }

    BiPoly run() {
        BiPoly e = expr();
        lex.skip_ws();
        if (lex.pos != lex.s.size())
            throw parse_error("trailing input", lex.pos);
        return e;
    }

    BiPoly expr() {
        BiPoly acc = term();
        while (true) {
            if (lex.accept('+')) acc += term();
            else if (lex.accept('-')) acc -= term();
            else return acc;
        }
    }

    BiPoly term() {
        BiPoly acc = unary();
        while (lex.accept('*')) acc *= unary();
        return acc;
    }

    BiPoly unary() {
        if (lex.accept('-')) return -unary();
        return power();
    }

    BiPoly power() {
        BiPoly base = atom();
        if (lex.accept('^')) {
            mpz_class e = lex.integer();
            if (!e.fits_ulong_p() || e > 4096)
                throw parse_error("exponent out of range", lex.pos);
            BiPoly acc(1);
            for (unsigned long i = 0; i < e.get_ui(); ++i) acc *= base;
            return acc;
        }
        return base;
    }

    BiPoly atom() {
        char c = lex.peek();
        if (c == '(') {
            lex.expect('(');
            BiPoly e = expr();
            lex.expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num = lex.integer();
            if (lex.accept('/')) {
                std::size_t at = lex.pos;
                mpz_class den = lex.integer();
                if (den == 0) throw parse_error("zero denominator in literal", at);
                return BiPoly(Rational(num, den));
            }
            return BiPoly(Rational(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t at = lex.pos;
            std::string name = lex.ident();
            for (std::size_t i = 0; i < vars.size(); ++i)
                if (vars[i] == name)
                    return i == 0 ? BiPoly::var_x() : BiPoly::var_y();
            throw parse_error("unknown variable '" + name + "'", at);
        }
        throw parse_error("unexpected character", lex.pos);
    }
};

} // namespace

BiPoly parse_expr(const std::string& text, const std::vector<std::string>& variables) {
    return Parser(text, variables).run();
}

PolyQ parse_poly(const std::string& text, const std::string& variable) {
    BiPoly p = parse_expr(text, {variable});
    return p.eval_y(Rational(0)); // dy is always 0 here
}

Rational parse_rational(const std::string& text) {
    BiPoly p = parse_expr(text, {});
    return p.eval(Rational(0), Rational(0));
}

RatFun parse_ratfun(const std::string& text, const std::string& variable) {
    // find a '/' at paren depth zero that is not part of a p/q literal
    int depth = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(') ++depth;
        else if (c == ')') --depth;
        else if (c == '/' && depth == 0) {
            std::size_t j = i;
            while (j > 0 && std::isspace(static_cast<unsigned char>(text[j - 1]))) --j;
            if (j > 0 && std::isdigit(static_cast<unsigned char>(text[j - 1])))
                continue; // rational literal, handled by the expression parser
            return RatFun(parse_poly(text.substr(0, i), variable),
                          parse_poly(text.substr(i + 1), variable));
        }
    }
    return RatFun(parse_poly(text, variable));
}

std::string print_poly(const PolyQ& p, const std::string& variable) {
    return BiPoly::from_poly(p, false).str(variable, "");
}

std::string print_ratfun(const RatFun& f, const std::string& variable) {
    if (f.is_polynomial())
        return print_poly(f.num() * f.den().coeff(0).inverse(), variable);
    return "(" + print_poly(f.num(), variable) + ")/(" + print_poly(f.den(), variable) + ")";
}

std::string print_bipoly(const BiPoly& p, const std::string& xname, const std::string& yname) {
    return p.str(xname, yname);
}

} // namespace tq
