#include <doctest.h>

#include <random>

#include "qpoincare/hopf.hpp"
#include "qpoincare/repr.hpp"

using namespace qpoin;
using G = Gen;

namespace {

Element gen(G g) { return Element::gen(g); }

Element random_lorentz(std::mt19937_64& rng, int len) {
    Word w;
    for (int i = 0; i < len; ++i)
        w.push_back(static_cast<Gen>(4 + rng() % 8));
    return Element::word(w);
}

}  // namespace

TEST_CASE("coproduct on generators") {
    CHECK(coproduct(gen(G::K)) == Tensor2::of(gen(G::K), gen(G::K)));
    CHECK(coproduct(Element::unit()) == Tensor2::unit());
    CHECK(coproduct(gen(G::a)) ==
          Tensor2::of(gen(G::a), gen(G::a)) + Tensor2::of(gen(G::b), gen(G::c)));
    CHECK(coproduct(gen(G::E)) ==
          Tensor2::of(gen(G::E), gen(G::K)) +
              Tensor2::of(Element::unit(), gen(G::E)));
    CHECK_THROWS_AS(coproduct(gen(G::P0)), DomainError);
}

TEST_CASE("coproduct is an algebra homomorphism") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 25; ++t) {
        Element x = random_lorentz(rng, 2), y = random_lorentz(rng, 2);
        CHECK(coproduct(x * y) == coproduct(x) * coproduct(y));
    }
}

TEST_CASE("counit and antipode basics") {
    CHECK(counit(gen(G::b)).is_zero());
    CHECK(counit(gen(G::a)) == Scalar::one());
    CHECK(counit(gen(G::E)).is_zero());
    CHECK(antipode(gen(G::E)) ==
          Element::word({G::E, G::Kinv}, -Scalar::one()));
    CHECK(antipode(gen(G::K)) == gen(G::Kinv));
    // S(a) = d, S(d) = a, so S^2(a) = a
    CHECK(antipode(antipode(gen(G::a))) == gen(G::a));
    CHECK(antipode(gen(G::a)) == gen(G::d));
    // S^2 = conjugation by K on the rotation part
    CHECK(antipode(antipode(gen(G::E))) == Scalar::q_pow(2) * gen(G::E));
    CHECK(antipode(antipode(gen(G::b))) == Scalar::q_pow(2) * gen(G::b));
    CHECK_THROWS_AS(antipode(gen(G::Pm)), DomainError);
}

TEST_CASE("antipode inverse via the star involution") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 20; ++t) {
        Element x = random_lorentz(rng, 3);
        CHECK(antipode_inv(antipode(x)) == x);
        CHECK(antipode(antipode_inv(x)) == x);
    }
}

TEST_CASE("coassociativity on all generators") {
    for (int i = 4; i < 12; ++i) {
        Element h = gen(static_cast<Gen>(i));
        CHECK(coproduct_left_nested(h) == coproduct_right_nested(h));
    }
}

TEST_CASE("hopf axiom battery") {
    auto results = check_hopf_axioms();
    for (const auto& r : results) {
        INFO(r.id, " ", r.witness);
        CHECK(r.status == Status::Pass);
    }
    CHECK(results.size() == 49);  // 7 axioms x 7 generators
}

TEST_CASE("corrupted coproduct is caught by the counit law") {
    auto results = check_hopf_axioms(true);
    bool counit_failed = false;
    for (const auto& r : results)
        if (r.status == Status::Fail &&
            r.id.find("counit") != std::string::npos)
            counit_failed = true;
    CHECK(counit_failed);
}

TEST_CASE("adjoint actions") {
    // ad_left(1, x) = x
    Element x = Element::word({G::Pm, G::K});
    CHECK(ad_left(Element::unit(), x) == x);

    // left 4-vector property: ad_left(h, P_nu) = P_mu Lambda(h)^mu_nu
    for (int i = 4; i < 12; ++i) {
        Element h = gen(static_cast<Gen>(i));
        SMat lam = lambda_of(h);
        for (int nu = 0; nu < 4; ++nu) {
            Element lhs = ad_left(h, gen(momentum_gen(nu)));
            Element rhs;
            for (int mu = 0; mu < 4; ++mu)
                rhs += lam.at(mu, nu) * gen(momentum_gen(mu));
            INFO("h = ", gen_name(static_cast<Gen>(i)), ", nu = ", nu);
            CHECK(lhs == rhs);
        }
    }

    // action property on random triples
    std::mt19937_64 rng(31);
    for (int t = 0; t < 10; ++t) {
        Element g1 = random_lorentz(rng, 2);
        Element h1 = random_lorentz(rng, 1);
        Word xw;
        for (int i = 0; i < 2; ++i)
            xw.push_back(static_cast<Gen>(rng() % kGenCount));
        Element xx = Element::word(xw);
        CHECK(ad_left(g1 * h1, xx) == ad_left(g1, ad_left(h1, xx)));
        CHECK(ad_right(ad_right(xx, g1), h1) == ad_right(xx, g1 * h1));
    }
}

TEST_CASE("module action") {
    CHECK(module_action(gen(G::K), gen(G::P0)) == gen(G::P0));
    // unit of a module algebra: h |> 1 = eps(h) 1
    CHECK(module_action(gen(G::E), Element::unit()).is_zero());
    CHECK(module_action(gen(G::a), Element::unit()) == Element::unit());

    // coincides with ad_left on the momentum algebra
    Element pmpp = gen(G::Pm) * gen(G::Pp);
    CHECK(module_action(gen(G::E), pmpp) == ad_left(gen(G::E), pmpp));

    std::mt19937_64 rng(37);
    for (int t = 0; t < 12; ++t) {
        Element h = random_lorentz(rng, 2);
        Word xw;
        for (int i = 0; i < 2; ++i)
            xw.push_back(static_cast<Gen>(rng() % 4));
        Element xx = Element::word(xw);
        CHECK(module_action(h, xx) == ad_left(h, xx));
    }

    // module-algebra compatibility: h |> (x y) = (h1 |> x)(h2 |> y)
    for (int i = 4; i < 12; ++i) {
        Element h = gen(static_cast<Gen>(i));
        Element xe = gen(G::Pm), ye = gen(G::P3);
        Element lhs = module_action(h, xe * ye);
        Element rhs;
        const Tensor2 dh = coproduct(h);
        for (const auto& [legs, c] : dh.terms())
            rhs += c * (module_action(Element::word(legs.first.w), xe) *
                        module_action(Element::word(legs.second.w), ye));
        CHECK(lhs == rhs);
    }

    CHECK_THROWS_AS(module_action(gen(G::E), gen(G::K)), DomainError);
}

TEST_CASE("reverse cross relation via the inverse antipode") {
    // P_nu h = h_(2) P_mu Lambda(S^-1 h_(1))^mu_nu -- the other reading of
    // the cross relations, independent of the rule table's orientation
    for (int i = 4; i < 12; ++i) {
        Element h = gen(static_cast<Gen>(i));
        const Tensor2 dh = coproduct(h);
        for (int nu = 0; nu < 4; ++nu) {
            Element lhs = gen(momentum_gen(nu)) * h;
            Element rhs;
            for (const auto& [legs, c] : dh.terms()) {
                SMat lam = lambda_of(antipode_inv(Element::word(legs.first.w)));
                for (int mu = 0; mu < 4; ++mu) {
                    if (lam.at(mu, nu).is_zero()) continue;
                    rhs += (c * lam.at(mu, nu)) *
                           (Element::word(legs.second.w) *
                            gen(momentum_gen(mu)));
                }
            }
            INFO("h = ", gen_name(static_cast<Gen>(i)), ", nu = ", nu);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("star compatibility of the action") {
    for (int i = 4; i < 12; ++i) {
        Element h = gen(static_cast<Gen>(i));
        for (int nu = 0; nu < 4; ++nu) {
            Element p = gen(momentum_gen(nu));
            CHECK(star(module_action(h, p)) ==
                  module_action(star(antipode(h)), star(p)));
        }
    }
}
