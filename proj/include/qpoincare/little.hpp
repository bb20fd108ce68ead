/**
 * @file little.hpp
 * @brief Momentum characters, the hat-chi projection, and the massive and
 *        massless little algebras.
 *
 * A momentum character assigns exact scalar eigenvalues (p0, p-, p+, p3)
 * to the momenta so that it extends to a one-dimensional *-representation
 * of the momentum algebra. The classification is rigid: the relations
 * force p_A (p0 - p3) = 0, the *-structure forces p+ = -q p-, and a real
 * mass kills p± in the p0 = p3 branch, leaving exactly the massive family
 * (±m, 0, 0, 0) and the massless family (k, 0, 0, k).
 *
 * All verified identities are homogeneous of degree one in the scale m or
 * k, so the little-algebra reports run at unit scale; hat_chi accepts any
 * valid character, including numerically scaled ones.
 */
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qpoincare/element.hpp"
#include "qpoincare/report.hpp"

namespace qpoin {

struct MomentumCharacter {
    std::array<Scalar, 4> p;  // values of (P0, P-, P+, P3), basis {0,-,+,3}
};

struct CharacterVerdict {
    bool valid = false;
    std::string reason;  // which condition failed, or the accepted family
};

/// full validity check: expanded momentum relations under the character,
/// *-conditions, and the real-mass constraint on the p0 = p3 branch
CharacterVerdict validate_character(const MomentumCharacter& chr);

struct CharacterFamily {
    std::string tag;  // "massive" | "massless"
    MomentumCharacter representative;  // at unit scale
    std::string description;
};

/// the two families of momentum eigenvalues with real mass; construction
/// verifies the representatives (both signs) and that the excluded branch
/// p0 = p3 with p- != 0 produces a negative mass square
std::vector<CharacterFamily> classify_characters();

/// replace the momentum block of every normal-ordered term by its
/// character value, keeping the Lorentz factor:
/// P-block . h  ->  chi(P-block) h. Throws DomainError for an invalid
/// character.
Element hat_chi(const MomentumCharacter& chr, const Element& x);

struct LittleAlgebraReport {
    std::string case_tag;
    std::vector<std::pair<std::string, Element>> generators;
    std::vector<CheckResult> checks;
    [[nodiscard]] bool all_pass() const {
        for (const auto& c : checks)
            if (c.status != Status::Pass) return false;
        return true;
    }
};

/// hat_chi images of the Pauli-Lubanski vector at (m,0,0,0), the four
/// closed forms, and the recovery of the rotation-algebra relations from
/// the generator set {lam^-1(W-1), J-K^-1, J+K^-1, lam^-1(W-K^-1)} + K
LittleAlgebraReport little_algebra_massive();

/// hat_chi images at (k,0,0,k); sphere relations, K commutation and
/// *-structure of the N_A, and the right-coideal property
/// Delta(N_B) = N_A (x) (L+)^A_B
LittleAlgebraReport little_algebra_massless();

/// classification fuzz: `count` deliberately invalid tuples, all rejected
std::vector<CheckResult> check_characters(uint64_t seed, int count);

}  // namespace qpoin
