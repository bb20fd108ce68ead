#include "qpoincare/parse.hpp"

#include <cctype>

namespace qpoin {

namespace {

struct AtomVal {
    Element v;
    bool is_q = false;  // the literal symbol q (admits half-integer powers)
};

bool is_scalar_element(const Element& e) {
    return e.is_zero() ||
           (e.terms().size() == 1 && e.terms().begin()->first.is_unit());
}

Scalar as_scalar(const Element& e) {
    if (e.is_zero()) return Scalar::zero();
    return e.terms().begin()->second;
}

class Parser {
  public:
    explicit Parser(const std::string& s) : s_(s) {}

    Element parse_all() {
        Element e = parse_expr();
        skip_ws();
        if (i_ != s_.size()) throw ParseError("unexpected trailing input", i_);
        return e;
    }

  private:
    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
    }

    char peek() {
        skip_ws();
        return i_ < s_.size() ? s_[i_] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) {
            ++i_;
            return true;
        }
        return false;
    }

    long parse_int() {
        skip_ws();
        size_t start = i_;
        bool neg = false;
        if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) {
            neg = s_[i_] == '-';
            ++i_;
        }
        if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
            throw ParseError("expected integer", start);
        long v = 0;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
            v = v * 10 + (s_[i_++] - '0');
        return neg ? -v : v;
    }

    Element parse_expr() {
        bool neg = false;
        if (peek() == '-') {
            ++i_;
            neg = true;
        } else if (peek() == '+') {
            ++i_;
        }
        Element acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            char c = peek();
            if (c == '+') {
                ++i_;
                acc += parse_term();
            } else if (c == '-') {
                ++i_;
                acc -= parse_term();
            } else {
                break;
            }
        }
        return acc;
    }

    bool starts_factor(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '(' ||
               c == '[';
    }

    Element parse_term() {
        Element acc = parse_factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++i_;
                acc = acc * parse_factor();
            } else if (starts_factor(c)) {
                acc = acc * parse_factor();  // juxtaposition
            } else {
                break;
            }
        }
        return acc;
    }

    Element parse_factor() {
        AtomVal a = parse_atom();
        if (peek() != '^') return a.v;
        ++i_;
        skip_ws();
        // exponent: int, or a parenthesized int / 2 half-power
        if (eat('(')) {
            long num = parse_int();
            long den = 1;
            if (eat('/')) den = parse_int();
            if (!eat(')')) throw ParseError("expected ) in exponent", i_);
            if (den == 1) return apply_power(a, num);
            if (den != 2 || !a.is_q)
                throw ParseError(
                    "fractional exponents only as q^(k/2)", i_);
            return Element::scalar(Scalar::p_pow(static_cast<int>(num)));
        }
        return apply_power(a, parse_int());
    }

    Element apply_power(const AtomVal& a, long k) {
        if (k >= 0) return a.v.pow(static_cast<int>(k));
        if (is_scalar_element(a.v)) {
            Scalar s = as_scalar(a.v);
            if (s.is_zero()) throw ParseError("zero to a negative power", i_);
            return Element::scalar(s.pow(static_cast<int>(k)));
        }
        // K and Kinv are the only invertible generators
        if (a.v == Element::gen(Gen::K))
            return Element::gen(Gen::Kinv).pow(static_cast<int>(-k));
        if (a.v == Element::gen(Gen::Kinv))
            return Element::gen(Gen::K).pow(static_cast<int>(-k));
        throw ParseError("negative power of a non-invertible element", i_);
    }

    AtomVal parse_atom() {
        skip_ws();
        if (i_ >= s_.size()) throw ParseError("unexpected end of input", i_);
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            Element e = parse_expr();
            if (!eat(')')) throw ParseError("expected )", i_);
            return {e, false};
        }
        if (c == '[') {
            ++i_;
            long n = parse_int();
            if (!eat(']')) throw ParseError("expected ]", i_);
            return {Element::scalar(Scalar::bracket(static_cast<int>(n))),
                    false};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long num = parse_int();
            // a rational literal num/den, not a division operator
            size_t save = i_;
            if (eat('/')) {
                skip_ws();
                if (i_ < s_.size() &&
                    std::isdigit(static_cast<unsigned char>(s_[i_]))) {
                    long den = parse_int();
                    return {Element::scalar(Scalar::rational(num, den)),
                            false};
                }
                i_ = save;
            }
            return {Element::scalar(Scalar::integer(num)), false};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = i_;
            while (i_ < s_.size() &&
                   std::isalnum(static_cast<unsigned char>(s_[i_])))
                ++i_;
            std::string name = s_.substr(start, i_ - start);
            return symbol(name, start);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", i_);
    }

    AtomVal symbol(const std::string& name, size_t pos) {
        static const std::pair<const char*, Gen> gens[] = {
            {"E", Gen::E},   {"F", Gen::F},   {"K", Gen::K},
            {"Kinv", Gen::Kinv}, {"a", Gen::a}, {"b", Gen::b},
            {"c", Gen::c},   {"d", Gen::d},   {"P0", Gen::P0},
            {"Pm", Gen::Pm}, {"Pp", Gen::Pp}, {"P3", Gen::P3},
        };
        for (const auto& [n, g] : gens)
            if (name == n) return {Element::gen(g), false};
        if (name == "W") return {casimir_w(), false};
        if (name == "J3") return {j_three(), false};
        if (name == "Jp") return {j_plus(), false};
        if (name == "Jm") return {j_minus(), false};
        if (name == "q") return {Element::scalar(Scalar::q_pow(1)), true};
        if (name == "qh") return {Element::scalar(Scalar::p_pow(1)), false};
        if (name == "s2") return {Element::scalar(Scalar::beta()), false};
        if (name == "lam") return {Element::scalar(Scalar::lambda()), false};
        throw ParseError("unknown symbol '" + name + "'", pos);
    }

    const std::string& s_;
    size_t i_ = 0;
};

}  // namespace

Element parse(const std::string& text) { return Parser(text).parse_all(); }

std::string print(const Element& e) { return e.str(); }

}  // namespace qpoin
