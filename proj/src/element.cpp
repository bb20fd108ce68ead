#include "qpoincare/element.hpp"

#include <sstream>

#include "qpoincare/rewrite.hpp"

namespace qpoin {

bool Monomial::has_momentum() const {
    for (Gen g : w)
        if (is_momentum(g)) return true;
    return false;
}

bool Monomial::pure_momentum() const {
    for (Gen g : w)
        if (!is_momentum(g)) return false;
    return true;
}

std::pair<Word, Word> Monomial::split_momentum() const {
    Word p, h;
    for (Gen g : w) {
        if (is_momentum(g))
            p.push_back(g);
        else
            h.push_back(g);
    }
    return {std::move(p), std::move(h)};
}

Element Element::scalar(const Scalar& s) {
    Element e;
    e.add_term(Monomial{}, s);
    return e;
}

Element Element::gen(Gen g) {
    Element e;
    e.add_term(Monomial{{g}}, Scalar::one());
    return e;
}

Element Element::word(const Word& w, const Scalar& coeff) {
    return Engine::instance().normalize(w, coeff);
}

Scalar Element::coeff(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Scalar::zero() : it->second;
}

bool Element::pure_lorentz() const {
    for (const auto& [m, s] : t_)
        if (m.has_momentum()) return false;
    return true;
}

bool Element::pure_momentum() const {
    for (const auto& [m, s] : t_)
        if (!m.pure_momentum()) return false;
    return true;
}

void Element::add_term(const Monomial& m, const Scalar& s) {
    if (s.is_zero()) return;
    auto [it, inserted] = t_.try_emplace(m, s);
    if (!inserted) {
        it->second += s;
        if (it->second.is_zero()) t_.erase(it);
    }
}

Element operator+(const Element& x, const Element& y) {
    Element r = x;
    for (const auto& [m, s] : y.t_) r.add_term(m, s);
    return r;
}

Element operator-(const Element& x, const Element& y) { return x + (-y); }

Element Element::operator-() const {
    Element r;
    for (const auto& [m, s] : t_) r.t_.emplace(m, -s);
    return r;
}

Element operator*(const Scalar& s, const Element& x) {
    if (s.is_zero()) return {};
    Element r;
    for (const auto& [m, c] : x.t_) r.t_.emplace(m, s * c);
    return r;
}

Element operator*(const Element& x, const Element& y) {
    Element r;
    const auto& eng = Engine::instance();
    for (const auto& [mx, cx] : x.t_) {
        for (const auto& [my, cy] : y.t_) {
            Word w = mx.w;
            w.insert(w.end(), my.w.begin(), my.w.end());
            r += eng.normalize(w, cx * cy);
        }
    }
    return r;
}

Element Element::pow(int n) const {
    if (n < 0) throw DomainError("negative power of an algebra element");
    Element r = unit();
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
}

Element commutator(const Element& x, const Element& y) {
    return x * y - y * x;
}

namespace {

// images of single generators under *
void star_gen(Gen g, Word& w, Scalar& c) {
    switch (g) {
        case Gen::P0: w.push_back(Gen::P0); break;
        case Gen::P3: w.push_back(Gen::P3); break;
        case Gen::Pm:  // P-* = -q^-1 P+
            w.push_back(Gen::Pp);
            c *= -Scalar::q_pow(-1);
            break;
        case Gen::Pp:  // P+* = -q P-
            w.push_back(Gen::Pm);
            c *= -Scalar::q_pow(1);
            break;
        case Gen::E:  // E* = F K
            w.push_back(Gen::F);
            w.push_back(Gen::K);
            break;
        case Gen::F:  // F* = K^-1 E
            w.push_back(Gen::Kinv);
            w.push_back(Gen::E);
            break;
        case Gen::K: w.push_back(Gen::K); break;
        case Gen::Kinv: w.push_back(Gen::Kinv); break;
        case Gen::a: w.push_back(Gen::d); break;
        case Gen::d: w.push_back(Gen::a); break;
        case Gen::b:  // b* = -q^-1 c
            w.push_back(Gen::c);
            c *= -Scalar::q_pow(-1);
            break;
        case Gen::c:  // c* = -q b
            w.push_back(Gen::b);
            c *= -Scalar::q_pow(1);
            break;
    }
}

}  // namespace

Element star(const Element& x) {
    Element r;
    for (const auto& [m, s] : x.terms()) {
        Word w;
        Scalar c = s;  // coefficients are fixed: the field is real
        for (auto it = m.w.rbegin(); it != m.w.rend(); ++it)
            star_gen(*it, w, c);
        r += Element::word(w, c);
    }
    return r;
}

Element j_minus() {
    // q [2]^(-1/2) K F, with [2]^(-1/2) = s2/[2]
    Scalar c = Scalar::q_pow(1) * Scalar::beta() / Scalar::bracket(2);
    return Element::word({Gen::K, Gen::F}, c);
}

Element j_plus() {
    Scalar c = -(Scalar::beta() / Scalar::bracket(2));
    return Element::word({Gen::E}, c);
}

Element j_three() {
    Scalar inv2 = Scalar::bracket(2).inverse();
    return Element::word({Gen::E, Gen::F}, inv2 * Scalar::q_pow(-1)) -
           Element::word({Gen::F, Gen::E}, inv2 * Scalar::q_pow(1));
}

Element casimir_w() {
    return Element::gen(Gen::K) - Scalar::lambda() * j_three();
}

Element mass_casimir() {
    return Element::word({Gen::P0, Gen::P0}) +
           Element::word({Gen::Pm, Gen::Pp}, Scalar::q_pow(-1)) +
           Element::word({Gen::Pp, Gen::Pm}, Scalar::q_pow(1)) -
           Element::word({Gen::P3, Gen::P3});
}

std::string to_string(const Monomial& m) {
    if (m.is_unit()) return "1";
    std::ostringstream os;
    size_t i = 0;
    bool first = true;
    while (i < m.w.size()) {
        size_t j = i;
        while (j < m.w.size() && m.w[j] == m.w[i]) ++j;
        if (!first) os << "*";
        first = false;
        os << gen_name(m.w[i]);
        if (j - i > 1) os << "^" << j - i;
        i = j;
    }
    return os.str();
}

namespace {

// a sum at parenthesis depth zero needs wrapping when used as a coefficient
bool has_toplevel_sum(const std::string& s) {
    int depth = 0;
    for (size_t i = 0; i + 2 < s.size(); ++i) {
        if (s[i] == '(' || s[i] == '[') ++depth;
        if (s[i] == ')' || s[i] == ']') --depth;
        if (depth == 0 && s[i] == ' ' && (s[i + 1] == '+' || s[i + 1] == '-') &&
            s[i + 2] == ' ')
            return true;
    }
    return false;
}

}  // namespace

std::string Element::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, s] : t_) {
        std::string cs = s.str();
        bool neg = cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool need_paren = has_toplevel_sum(cs);
        if (m.is_unit()) {
            os << (need_paren ? "(" + cs + ")" : cs);
        } else if (cs == "1") {
            os << to_string(m);
        } else {
            os << (need_paren ? "(" + cs + ")" : cs) << "*" << to_string(m);
        }
    }
    return os.str();
}

}  // namespace qpoin
