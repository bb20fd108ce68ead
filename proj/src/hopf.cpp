#include "qpoincare/hopf.hpp"

#include <sstream>

#include "qpoincare/repr.hpp"

namespace qpoin {

// ---------------------------------------------------------------- tensors

Tensor2 Tensor2::unit() {
    Tensor2 t;
    t.add_term(Monomial{}, Monomial{}, Scalar::one());
    return t;
}

void Tensor2::add_term(const Monomial& x, const Monomial& y, const Scalar& s) {
    if (s.is_zero()) return;
    auto key = std::make_pair(x, y);
    auto [it, inserted] = t_.try_emplace(key, s);
    if (!inserted) {
        it->second += s;
        if (it->second.is_zero()) t_.erase(it);
    }
}

Tensor2 Tensor2::of(const Element& x, const Element& y) {
    Tensor2 t;
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms()) t.add_term(mx, my, cx * cy);
    return t;
}

Tensor2 operator+(const Tensor2& x, const Tensor2& y) {
    Tensor2 r = x;
    for (const auto& [k, s] : y.t_) r.add_term(k.first, k.second, s);
    return r;
}

Tensor2 operator-(const Tensor2& x, const Tensor2& y) {
    return x + Scalar::integer(-1) * y;
}

Tensor2 operator*(const Scalar& s, const Tensor2& y) {
    Tensor2 r;
    if (s.is_zero()) return r;
    for (const auto& [k, c] : y.t_) r.add_term(k.first, k.second, s * c);
    return r;
}

Tensor2 operator*(const Tensor2& x, const Tensor2& y) {
    Tensor2 r;
    for (const auto& [kx, cx] : x.t_) {
        for (const auto& [ky, cy] : y.t_) {
            Word w1 = kx.first.w;
            w1.insert(w1.end(), ky.first.w.begin(), ky.first.w.end());
            Word w2 = kx.second.w;
            w2.insert(w2.end(), ky.second.w.begin(), ky.second.w.end());
            Element left = Element::word(w1);
            Element right = Element::word(w2);
            Scalar c = cx * cy;
            for (const auto& [ml, cl] : left.terms())
                for (const auto& [mr, cr] : right.terms())
                    r.add_term(ml, mr, c * cl * cr);
        }
    }
    return r;
}

std::string Tensor2::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, s] : t_) {
        if (!first) os << " + ";
        first = false;
        std::string cs = s.str();
        if (cs != "1") os << "(" << cs << ")*";
        os << to_string(k.first) << " (x) " << to_string(k.second);
    }
    return os.str();
}

void Tensor3::add_term(const Monomial& x, const Monomial& y, const Monomial& z,
                       const Scalar& s) {
    if (s.is_zero()) return;
    auto key = std::make_tuple(x, y, z);
    auto [it, inserted] = t_.try_emplace(key, s);
    if (!inserted) {
        it->second += s;
        if (it->second.is_zero()) t_.erase(it);
    }
}

// --------------------------------------------------------------- coalgebra

const std::vector<std::pair<Word, Word>>& coproduct_legs(Gen h) {
    using G = Gen;
    static const std::vector<std::pair<Word, Word>> tables[8] = {
        /* F    */ {{{G::F}, {}}, {{G::Kinv}, {G::F}}},
        /* Kinv */ {{{G::Kinv}, {G::Kinv}}},
        /* K    */ {{{G::K}, {G::K}}},
        /* E    */ {{{G::E}, {G::K}}, {{}, {G::E}}},
        /* a    */ {{{G::a}, {G::a}}, {{G::b}, {G::c}}},
        /* b    */ {{{G::a}, {G::b}}, {{G::b}, {G::d}}},
        /* c    */ {{{G::c}, {G::a}}, {{G::d}, {G::c}}},
        /* d    */ {{{G::c}, {G::b}}, {{G::d}, {G::d}}},
    };
    if (is_momentum(h))
        throw DomainError("coproduct of a momentum generator");
    return tables[static_cast<size_t>(h) - 4];
}

namespace {

Tensor2 delta_gen(Gen g, bool corrupt_delta_e) {
    Tensor2 t;
    for (const auto& [l1, l2] : coproduct_legs(g)) {
        if (corrupt_delta_e && g == Gen::E && l1.empty()) continue;
        t.add_term(Monomial{l1}, Monomial{l2}, Scalar::one());
    }
    return t;
}

Tensor2 delta(const Element& h, bool corrupt_delta_e = false) {
    Tensor2 out;
    for (const auto& [m, s] : h.terms()) {
        if (m.has_momentum())
            throw DomainError("coproduct of a momentum element");
        Tensor2 t = Tensor2::unit();
        for (Gen g : m.w) t = t * delta_gen(g, corrupt_delta_e);
        out = out + s * t;
    }
    return out;
}

}  // namespace

Tensor2 coproduct(const Element& h) { return delta(h); }

Scalar counit(const Element& h) {
    Scalar out = Scalar::zero();
    for (const auto& [m, s] : h.terms()) {
        bool zero = false;
        for (Gen g : m.w) {
            if (is_momentum(g)) throw DomainError("counit of a momentum element");
            if (g == Gen::E || g == Gen::F || g == Gen::b || g == Gen::c)
                zero = true;
        }
        if (!zero) out += s;  // remaining generators all have counit 1
    }
    return out;
}

Element antipode(const Element& h) {
    Element out;
    for (const auto& [m, s] : h.terms()) {
        Element prod = Element::scalar(s);
        // anti-homomorphism: reverse the word
        for (auto it = m.w.rbegin(); it != m.w.rend(); ++it) {
            Element img;
            switch (*it) {
                case Gen::E: img = Element::word({Gen::E, Gen::Kinv},
                                                 -Scalar::one());
                    break;
                case Gen::F: img = Element::word({Gen::K, Gen::F},
                                                 -Scalar::one());
                    break;
                case Gen::K: img = Element::gen(Gen::Kinv); break;
                case Gen::Kinv: img = Element::gen(Gen::K); break;
                case Gen::a: img = Element::gen(Gen::d); break;
                case Gen::b:
                    img = -Scalar::q_pow(1) * Element::gen(Gen::b);
                    break;
                case Gen::c:
                    img = -Scalar::q_pow(-1) * Element::gen(Gen::c);
                    break;
                case Gen::d: img = Element::gen(Gen::a); break;
                default:
                    throw DomainError("antipode of a momentum element");
            }
            prod = prod * img;
        }
        out += prod;
    }
    return out;
}

Element antipode_inv(const Element& h) { return star(antipode(star(h))); }

Element ad_left(const Element& h, const Element& x) {
    Element out;
    const Tensor2 dh = delta(h);
    for (const auto& [legs, c] : dh.terms()) {
        out += c * (Element::word(legs.first.w) * x *
                    antipode(Element::word(legs.second.w)));
    }
    return out;
}

Element ad_right(const Element& x, const Element& h) {
    Element out;
    const Tensor2 dh = delta(h);
    for (const auto& [legs, c] : dh.terms()) {
        out += c * (antipode(Element::word(legs.first.w)) * x *
                    Element::word(legs.second.w));
    }
    return out;
}

namespace {

Element mact_word(const Element& h, const Word& w, size_t i) {
    if (i == w.size()) return counit(h) * Element::unit();
    int nu = -1;
    switch (w[i]) {
        case Gen::P0: nu = kMu0; break;
        case Gen::Pm: nu = kMuM; break;
        case Gen::Pp: nu = kMuP; break;
        case Gen::P3: nu = kMu3; break;
        default: throw DomainError("module action needs a momentum element");
    }
    Element out;
    const Tensor2 dh = coproduct(h);
    for (const auto& [legs, c] : dh.terms()) {
        SMat lam = lambda_of(Element::word(legs.first.w));
        Element rest = mact_word(Element::word(legs.second.w), w, i + 1);
        if (rest.is_zero()) continue;
        for (int mu = 0; mu < 4; ++mu) {
            const Scalar& l = lam.at(mu, nu);
            if (l.is_zero()) continue;
            out += (c * l) * (Element::gen(momentum_gen(mu)) * rest);
        }
    }
    return out;
}

}  // namespace

Element module_action(const Element& h, const Element& x) {
    if (!x.pure_momentum())
        throw DomainError("module action defined on momentum polynomials");
    Element out;
    for (const auto& [m, c] : x.terms()) out += c * mact_word(h, m.w, 0);
    return out;
}

Tensor3 coproduct_left_nested(const Element& h) {
    Tensor3 out;
    const Tensor2 dh = coproduct(h);
    for (const auto& [legs, c] : dh.terms()) {
        const Tensor2 inner = coproduct(Element::word(legs.first.w));
        for (const auto& [in2, ci] : inner.terms())
            out.add_term(in2.first, in2.second, legs.second, c * ci);
    }
    return out;
}

Tensor3 coproduct_right_nested(const Element& h) {
    Tensor3 out;
    const Tensor2 dh = coproduct(h);
    for (const auto& [legs, c] : dh.terms()) {
        const Tensor2 inner = coproduct(Element::word(legs.second.w));
        for (const auto& [in2, ci] : inner.terms())
            out.add_term(legs.first, in2.first, in2.second, c * ci);
    }
    return out;
}

// ------------------------------------------------------------- the axioms

std::vector<CheckResult> check_hopf_axioms(bool corrupt_delta_e) {
    std::vector<CheckResult> out;
    const Gen hgens[] = {Gen::E, Gen::F, Gen::K, Gen::a, Gen::b, Gen::c,
                         Gen::d};
    for (Gen g : hgens) {
        std::string n{gen_name(g)};
        Element h = Element::gen(g);
        Tensor2 dh = delta(h, corrupt_delta_e);

        // coassociativity through nesting
        Tensor3 l, r;
        for (const auto& [legs, c] : dh.terms()) {
            const Tensor2 d1 = delta(Element::word(legs.first.w),
                                     corrupt_delta_e);
            for (const auto& [in2, ci] : d1.terms())
                l.add_term(in2.first, in2.second, legs.second, c * ci);
            const Tensor2 d2 = delta(Element::word(legs.second.w),
                                     corrupt_delta_e);
            for (const auto& [in2, ci] : d2.terms())
                r.add_term(legs.first, in2.first, in2.second, c * ci);
        }
        out.push_back(check("hopf/coassoc/" + n, l == r, "nesting differs"));

        // counit laws
        Element cl, cr;
        for (const auto& [legs, c] : dh.terms()) {
            cl += (c * counit(Element::word(legs.first.w))) *
                  Element::word(legs.second.w);
            cr += (c * counit(Element::word(legs.second.w))) *
                  Element::word(legs.first.w);
        }
        out.push_back(
            check("hopf/counit-left/" + n, cl == h, "(eps (x) id) != id"));
        out.push_back(
            check("hopf/counit-right/" + n, cr == h, "(id (x) eps) != id"));

        // antipode laws
        Element al, ar;
        for (const auto& [legs, c] : dh.terms()) {
            al += c * (antipode(Element::word(legs.first.w)) *
                       Element::word(legs.second.w));
            ar += c * (Element::word(legs.first.w) *
                       antipode(Element::word(legs.second.w)));
        }
        Element target = counit(h) * Element::unit();
        out.push_back(
            check("hopf/antipode-left/" + n, al == target, al.str()));
        out.push_back(
            check("hopf/antipode-right/" + n, ar == target, ar.str()));

        // Delta . * = (* (x) *) . Delta
        Tensor2 lhs = delta(star(h), corrupt_delta_e);
        Tensor2 rhs;
        for (const auto& [legs, c] : dh.terms()) {
            Element s1 = star(Element::word(legs.first.w));
            Element s2 = star(Element::word(legs.second.w));
            rhs = rhs + c * Tensor2::of(s1, s2);
        }
        out.push_back(check("hopf/star-coproduct/" + n, lhs == rhs,
                            "Delta does not commute with *"));

        // (S . *)^2 = id
        Element ss = antipode(star(antipode(star(h))));
        out.push_back(check("hopf/s-star-squared/" + n, ss == h, ss.str()));
    }
    return out;
}

}  // namespace qpoin
