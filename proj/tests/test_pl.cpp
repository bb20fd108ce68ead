#include <doctest.h>

#include "qpoincare/hopf.hpp"
#include "qpoincare/pauli_lubanski.hpp"
#include "qpoincare/repr.hpp"

using namespace qpoin;
using G = Gen;

TEST_CASE("L-matrix transcription spot checks") {
    const HMat& lp = l_plus();
    CHECK(lp.at(0, 0) == Element::unit());
    CHECK(lp.at(0, 1).is_zero());
    CHECK(lp.at(1, 1) == Element::word({G::a, G::a}));
    const HMat& lm = l_minus();
    CHECK(lm.at(1, 2).is_zero());
    // (L-)^3_0 = lam J3 = lam [2]^-1 (q^-1 EF - q FE)
    Scalar i2 = Scalar::bracket(2).inverse();
    Element want = Scalar::lambda() * i2 *
                   (Scalar::q_pow(-1) * Element::word({G::E, G::F}) -
                    Scalar::q_pow(1) * Element::word({G::F, G::E}));
    CHECK(lm.at(3, 0) == want);
    CHECK(lm.at(0, 0) == casimir_w());
}

TEST_CASE("sigma transports") {
    // zeroth column of L+ is (1,0,0,0): Sigma_I(P_0) = P_0
    CHECK(sigma(kMu0, SigmaVariant::I) == Element::gen(G::P0));

    // both transports commute with every momentum (32 pairs)
    for (int nu = 0; nu < 4; ++nu) {
        for (auto v : {SigmaVariant::I, SigmaVariant::I21inv}) {
            Element s = sigma(nu, v);
            for (int mu = 0; mu < 4; ++mu) {
                Element c = commutator(s, Element::gen(momentum_gen(mu)));
                INFO("variant ", (v == SigmaVariant::I ? "I" : "I21inv"),
                     " nu=", nu, " mu=", mu);
                CHECK(c.is_zero());
            }
        }
    }
}

TEST_CASE("left-transported combination without S^2 fails as designed") {
    bool some_nonzero = false;
    for (int nu = 0; nu < 4; ++nu) {
        Element s = sigma_left_no_s2(nu);
        for (int mu = 0; mu < 4; ++mu)
            if (!commutator(s, Element::gen(momentum_gen(mu))).is_zero())
                some_nonzero = true;
    }
    CHECK(some_nonzero);
}

TEST_CASE("Pauli-Lubanski vector") {
    const PauliLubanski& pl = pauli_lubanski();

    // frozen closed form of the zero component:
    // W_0 = lam^-1 (W-1) P0 - q J+ P- - q^-1 J- P+ + J3 P3
    Element w0 = Scalar::lambda().inverse() *
                     ((casimir_w() - Element::unit()) * Element::gen(G::P0)) -
                 Scalar::q_pow(1) * (j_plus() * Element::gen(G::Pm)) -
                 Scalar::q_pow(-1) * (j_minus() * Element::gen(G::Pp)) +
                 j_three() * Element::gen(G::P3);
    CHECK(pl.at(kMu0) == w0);

    // and the paper's form with the metric contraction J_A P_B g^{AB}
    Element j[3] = {j_minus(), j_three(), j_plus()};
    Element jp;
    for (int A = 0; A < 3; ++A)
        for (int B = 0; B < 3; ++B)
            jp += g3_up(A, B) * (j[A] * Element::gen(momentum_gen(four_index(B))));
    Element w0_paper =
        Scalar::lambda().inverse() *
            ((casimir_w() - Element::unit()) * Element::gen(G::P0)) +
        jp;
    CHECK(pl.at(kMu0) == w0_paper);

    // PL2: [W_mu, P_nu] = 0 for all 16 pairs
    for (int nu = 0; nu < 4; ++nu)
        for (int mu = 0; mu < 4; ++mu) {
            INFO("nu=", nu, " mu=", mu);
            CHECK(commutator(pl.at(nu), Element::gen(momentum_gen(mu)))
                      .is_zero());
        }

    // PL1: W is a right 4-vector: ad_right(W_nu, h) = W_mu Lambda(S^-1 h)^mu_nu
    for (Gen g : {G::E, G::F, G::K, G::a, G::b, G::c, G::d}) {
        Element h = Element::gen(g);
        SMat lam_sinv = lambda_of(antipode_inv(h));
        for (int nu = 0; nu < 4; ++nu) {
            Element lhs = ad_right(pl.at(nu), h);
            Element rhs;
            for (int mu = 0; mu < 4; ++mu)
                rhs += lam_sinv.at(mu, nu) * pl.at(mu);
            INFO("h=", gen_name(g), " nu=", nu);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("classical limit checks") {
    for (const auto& r : check_classical_limit()) {
        INFO(r.id, ": ", r.witness);
        CHECK(r.status == Status::Pass);
    }
}

TEST_CASE("L-matrix identities of the Casimir computation") {
    for (const auto& r : check_lmatrix_identities()) {
        INFO(r.id, ": ", r.witness);
        CHECK(r.status == Status::Pass);
    }
}

TEST_CASE("spin Casimir") {
    for (const auto& r : check_casimir()) {
        INFO(r.id, ": ", r.witness);
        CHECK(r.status == Status::Pass);
    }
    // centralizer invariance: elements commuting with all momenta stay in
    // the centralizer under the right adjoint action. Instances: each W_nu
    // and Omega itself, moved by a rotation and by a boost.
    for (Gen g : {G::E, G::a}) {
        for (int nu = 0; nu < 4; ++nu) {
            Element moved =
                ad_right(pauli_lubanski().at(nu), Element::gen(g));
            for (int mu = 0; mu < 4; ++mu)
                CHECK(commutator(moved, Element::gen(momentum_gen(mu)))
                          .is_zero());
        }
        Element moved_omega = ad_right(spin_casimir(), Element::gen(g));
        for (int mu = 0; mu < 4; ++mu)
            CHECK(commutator(moved_omega, Element::gen(momentum_gen(mu)))
                      .is_zero());
    }
}
