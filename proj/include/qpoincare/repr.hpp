/**
 * @file repr.hpp
 * @brief Metric and epsilon tensors, the 4-vector representation Lambda,
 *        the 16x16 numeric R-matrix, and floating spin-j matrices.
 *
 * The 4x4 images of a, b, c, d are transcribed tables; the images of
 * E, F, K are not printed anywhere and are derived from the J_A images:
 *   Lambda(J_A) = 0 (+) eps_A^B_C   (spin-0 (+) spin-1 block form),
 *   E = -[2]^(1/2) J+,   F = q^-1 [2]^(1/2) K^-1 J-,
 *   Lambda(K) = Lambda(W) + lam Lambda(J3),  Lambda(W) = diag(1, w1, w1, w1)
 * with w1 = (q^3+q^-3)/[2] the spin-1 value of the rotation Casimir.
 * The lowered epsilon eps_A^B_C = g_AD eps^DB_C; this lowering convention
 * reproduces all defining relations under Lambda (frozen after validation
 * by check_lambda).
 */
#pragma once

#include <vector>

#include "qpoincare/element.hpp"
#include "qpoincare/report.hpp"
#include "qpoincare/smatrix.hpp"

namespace qpoin {

// ---- metric and epsilon tables (4-basis {0,-,+,3}, 3-basis {-,3,+}) ----

/// eta^{mu nu}: diag-ish 4-metric, eta^{00}=1, eta^{-+}=q^-1, eta^{+-}=q,
/// eta^{33}=-1
Scalar eta_up(int mu, int nu);
/// eta_{mu nu} (numerically the same table; inverse of eta_up)
Scalar eta_dn(int mu, int nu);
/// 3-metric g^{AB}: g^{-+}=-q^-1, g^{33}=1, g^{+-}=-q
Scalar g3_up(int A, int B);
Scalar g3_dn(int A, int B);
/// eps^{AB}_C as printed
Scalar eps_up(int A, int B, int C);
/// eps_A^B_C = g_AD eps^DB_C
Scalar eps_mixed(int A, int B, int C);

// ---- the 4-vector representation ----

/// Lambda on a single generator (E, F, K, Kinv, a, b, c, d)
const SMat& lambda_gen(Gen h);

/// multiplicative extension of Lambda to any Lorentz element;
/// throws DomainError if a momentum generator is present
SMat lambda_of(const Element& h);

/// verifies that Lambda respects every defining relation of the Lorentz
/// algebra and the metric law eta Lambda(h)^T eta = Lambda(S h)
std::vector<CheckResult> check_lambda();

/// 16x16 R-matrix of the 4-vector representation:
/// R^{mu nu}_{sigma tau} = Lambda((L+)^nu_tau)^mu_sigma, row index
/// 4*mu+nu, column index 4*sigma+tau
SMat rmatrix4();
SMat rmatrix4_inv();

// ---- floating spin representations (limit checks only) ----

struct SpinRep {
    int twice_j = 0;
    double q = 0;
    // (2j+1)^2 row-major matrices, basis ordered m = j, j-1, ..., -j
    std::vector<double> e, f, k;
    [[nodiscard]] int dim() const { return twice_j + 1; }
};

/// standard q-deformed angular momentum matrices; j in {0,1/2,1,3/2,2},
/// q > 1 (construction checks the defining relations to 1e-9)
SpinRep spin_rep(int twice_j, double q);

/// exact spin-j value of the rotation Casimir W from the highest-weight
/// vector: w_j = q^(2j) - lam [2]^-1 q^-1 [2j]
Scalar casimir_w_value(int twice_j);

}  // namespace qpoin
