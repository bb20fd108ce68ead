/**
 * @file hopf.hpp
 * @brief Coalgebra maps on the Lorentz subalgebra and the Hopf adjoint
 *        actions on the full algebra.
 *
 * Delta, epsilon and S are defined on Lorentz generators by the standard
 * tables (E, F, K Drinfeld-Jimbo; the boost matrix is a multiplicative
 * quantum matrix) and extended as algebra (anti-)homomorphisms. Momenta
 * carry no coproduct: the full algebra is only a *-algebra, and every map
 * here throws DomainError when it meets a momentum generator.
 *
 * S^-1 is computed as * . S . *, which is an inverse of S exactly because
 * (S . *)^2 = id -- an axiom the test suite checks rather than assumes.
 */
#pragma once

#include <vector>

#include "qpoincare/report.hpp"
#include "qpoincare/tensor.hpp"

namespace qpoin {

/// coproduct legs of a single Lorentz generator (all with coefficient 1)
const std::vector<std::pair<Word, Word>>& coproduct_legs(Gen h);

Tensor2 coproduct(const Element& h);
Scalar counit(const Element& h);
Element antipode(const Element& h);
Element antipode_inv(const Element& h);

/// ad_L h |> x = h_(1) x S(h_(2))
Element ad_left(const Element& h, const Element& x);
/// x <| ad_R h = S(h_(1)) x h_(2)
Element ad_right(const Element& x, const Element& h);

/// module action of the Lorentz algebra on momentum polynomials;
/// on generators h |> P_nu = P_mu Lambda(h)^mu_nu, extended through the
/// coproduct; coincides with ad_left on the momentum algebra
Element module_action(const Element& h, const Element& x);

/// (Delta (x) id) Delta and (id (x) Delta) Delta for the coassociativity
/// check
Tensor3 coproduct_left_nested(const Element& h);
Tensor3 coproduct_right_nested(const Element& h);

/// Hopf-* axiom battery over the seven generators; the optional corrupted
/// flag drops the 1 (x) E term of Delta(E) as a negative control and is
/// expected to produce a counit-law failure.
std::vector<CheckResult> check_hopf_axioms(bool corrupt_delta_e = false);

}  // namespace qpoin
