#include "diffcert/parse.hpp"

#include <cctype>

namespace diffcert {

namespace {

class Parser {
public:
    Parser(const std::string& text, const ConstField& field) : text_(text), field_(field) {}

    RatFun run() {
        RatFun e = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    RatFun expr() {
        bool negate = false;
        if (!eat('+') && eat('-')) negate = true;
        RatFun acc = term();
        if (negate) acc = -acc;
        while (true) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    RatFun term() {
        RatFun acc = factor();
        while (true) {
            if (eat('*')) {
                acc *= factor();
            } else if (eat('/')) {
                std::size_t at = pos_;
                RatFun d = factor();
                if (d.is_zero()) throw ParseError("division by zero", at);
                acc /= d;
            } else {
                break;
            }
        }
        return acc;
    }

    RatFun factor() {
        RatFun b = base();
        if (eat('^')) {
            bool neg = eat('-');
            skip_ws();
            if (pos_ >= text_.size() || !std::isdigit((unsigned char)text_[pos_]))
                fail("expected integer exponent");
            long e = 0;
            while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) {
                e = e * 10 + (text_[pos_] - '0');
                if (e > 4096) fail("exponent too large");
                ++pos_;
            }
            if (neg && b.is_zero()) fail("zero to a negative power");
            return b.pow(neg ? -e : e);
        }
        return b;
    }

    RatFun base() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            RatFun e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (c == 'x') {
            ++pos_;
            return RatFun(Poly::variable());
        }
        if (c == 'q') {
            if (!field_.has_q()) fail("'q' is not available under the shift operator");
            ++pos_;
            return RatFun(Poly(field_.q()));
        }
        if (std::isdigit((unsigned char)c)) {
            Int value(0);
            while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) {
                value = value * 10 + (text_[pos_] - '0');
                ++pos_;
            }
            return RatFun(Poly(Scalar(Rat(value))));
        }
        fail("unexpected character");
    }

    const std::string& text_;
    const ConstField& field_;
    std::size_t pos_ = 0;
};

bool is_plain_number(const Scalar& s, Rat& out) {
    if (!is_number(s)) return false;
    out = to_number(s);
    return true;
}

std::string render_qpoly(const QPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        Rat c = p.coeff((std::size_t)k);
        if (c == 0) continue;
        std::string term;
        std::string var = k == 0 ? "" : (k == 1 ? "q" : "q^" + std::to_string(k));
        if (k == 0) {
            term = rat_abs(c).str();
        } else if (rat_abs(c) == 1) {
            term = var;
        } else {
            term = rat_abs(c).str() + "*" + var;
        }
        if (out.empty())
            out = (c < 0 ? "-" : "") + term;
        else
            out += (c < 0 ? "-" : "+") + term;
    }
    return out;
}

bool qpoly_single_term(const QPoly& p) {
    if (p.is_zero()) return true;
    for (int k = 0; k < p.degree(); ++k)
        if (!(p.coeff((std::size_t)k) == Rat(0))) return false;
    return true;
}

}  // namespace

RatFun parse_expression(const std::string& text, const ConstField& field) {
    return Parser(text, field).run();
}

std::string render_scalar(const Scalar& s) {
    Rat value;
    if (is_plain_number(s, value)) return value.str();
    std::string num = render_qpoly(s.num());
    if (!qpoly_single_term(s.num()) || s.num().coeff(0) < 0) num = "(" + num + ")";
    if (s.den().is_one()) return num;
    std::string den = render_qpoly(s.den());
    if (!qpoly_single_term(s.den())) den = "(" + den + ")";
    return num + "/" + den;
}

std::string render(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        Scalar c = p.coeff((std::size_t)k);
        if (c.is_zero()) continue;
        std::string var = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
        Rat value;
        std::string term;
        bool negative = false;
        if (is_plain_number(c, value)) {
            negative = value < 0;
            Rat mag = rat_abs(value);
            if (k == 0)
                term = mag.str();
            else if (mag == 1)
                term = var;
            else
                term = mag.str() + "*" + var;
        } else {
            std::string cs = render_scalar(c);
            if (cs[0] != '(') cs = "(" + cs + ")";
            term = k == 0 ? cs : cs + "*" + var;
        }
        if (out.empty())
            out = (negative ? "-" : "") + term;
        else
            out += (negative ? "-" : "+") + term;
    }
    return out;
}

std::string render(const RatFun& f) {
    std::string num = render(f.num());
    if (f.is_polynomial()) return num;
    // Multi-term numerators need parentheses before the division.
    bool simple_num = true;
    {
        int nonzero = 0;
        for (int k = 0; k <= f.num().degree(); ++k)
            if (!f.num().coeff((std::size_t)k).is_zero()) ++nonzero;
        simple_num = nonzero <= 1;
    }
    if (!simple_num) num = "(" + num + ")";
    const Poly& d = f.den();
    bool den_is_monomial = d.is_monic() && (std::size_t)d.degree() == d.valuation();
    std::string den = render(d);
    if (!den_is_monomial) den = "(" + den + ")";
    return num + "/" + den;
}

}  // namespace diffcert
