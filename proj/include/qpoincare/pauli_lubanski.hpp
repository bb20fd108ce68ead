/**
 * @file pauli_lubanski.hpp
 * @brief L-matrices, the right-tensor-operator transport Sigma, the
 *        q-Pauli-Lubanski vector and the spin Casimir.
 *
 * The two L-matrices are the 4-vector images of the universal R-matrix
 * factors; their entries are transcribed literally (boost quadratics for
 * L+, rotation combinations of W and J_A for L-). Sigma transports the
 * left 4-vector of momenta to a right one,
 *
 *   Sigma(P_nu) = S^2((L)^mu_nu) P_mu,
 *
 * and the Pauli-Lubanski vector is the lam^-1-scaled difference of the two
 * transports. Construction asserts that the difference of the transports
 * is divisible by lam termwise: outside the K / K^-1 / unit monomials
 * (whose lam^-1 (K-1)-type coefficients legitimately keep a simple pole)
 * no coefficient of W_nu may have a pole at q = 1. A violation would mean
 * a transcription error in an L-matrix entry and aborts construction.
 */
#pragma once

#include <array>
#include <vector>

#include "qpoincare/element.hpp"
#include "qpoincare/report.hpp"

namespace qpoin {

/// 4x4 matrix of algebra elements in the basis {0,-,+,3}
struct HMat {
    std::array<Element, 16> e;
    Element& at(int i, int j) { return e[static_cast<size_t>(i) * 4 + j]; }
    [[nodiscard]] const Element& at(int i, int j) const {
        return e[static_cast<size_t>(i) * 4 + j];
    }
};

/// L+ : upper-triangular-flavored boost matrix (a^2, b^2, sqrt-weighted
/// products, 1 + [2]bc in the corner)
const HMat& l_plus();
/// L- : rotation matrix built from W, J_A and K^-1
const HMat& l_minus();

enum class SigmaVariant { I, I21inv };

/// Sigma(P_nu) for the chosen R-matrix factorization (L+ for I, L- for
/// the flipped inverse)
Element sigma(int nu, SigmaVariant v);

/// left-transported combination without S^2; not a right tensor operator,
/// kept as the negative control that momentum commutation genuinely needs
/// the S^2 transport
Element sigma_left_no_s2(int nu);

struct PauliLubanski {
    std::array<Element, 4> w;  // components in basis {0,-,+,3}
    [[nodiscard]] const Element& at(int nu) const {
        return w[static_cast<size_t>(nu)];
    }
};

/// builds all four components; throws Error if the lam-divisibility
/// assertion fails
const PauliLubanski& pauli_lubanski();

/// spin Casimir Omega = eta^{tau nu} W_nu W_tau, normal form
const Element& spin_casimir();

/// exact identity for lam^-1 (W - 1) plus the numeric slope check of the
/// classical limit on spin representations
std::vector<CheckResult> check_classical_limit(
    const std::vector<double>& qvalues = {});

/// the two intermediate L-matrix identities of the Casimir simplification
std::vector<CheckResult> check_lmatrix_identities();

/// Omega against the closed form 2 lam^-2 S^2[eta - eta (L+)(L-)] P P,
/// centrality against all 11 non-inverse generators, and the exploratory
/// *-hermiticity report
std::vector<CheckResult> check_casimir();

}  // namespace qpoin
