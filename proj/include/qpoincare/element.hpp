/**
 * @file element.hpp
 * @brief Linear combinations of normal-ordered monomials in the 12 generators.
 *
 * An Element is a finite map monomial -> Scalar with no zero coefficients.
 * All constructors and operations return fully normal-ordered values, so
 * equality of Elements is equality of representations, and x == y exactly
 * when x - y normalizes to zero.
 */
#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "qpoincare/gens.hpp"
#include "qpoincare/scalar.hpp"

namespace qpoin {

using Word = std::vector<Gen>;

struct Monomial {
    Word w;
    auto operator<=>(const Monomial&) const = default;

    [[nodiscard]] bool is_unit() const { return w.empty(); }
    [[nodiscard]] int degree() const { return static_cast<int>(w.size()); }
    [[nodiscard]] bool has_momentum() const;
    [[nodiscard]] bool pure_momentum() const;
    /// split into leading momentum block and trailing Lorentz block
    [[nodiscard]] std::pair<Word, Word> split_momentum() const;
};

class Element {
  public:
    Element() = default;

    static Element zero() { return {}; }
    static Element unit() { return scalar(Scalar::one()); }
    static Element scalar(const Scalar& s);
    static Element gen(Gen g);
    /// normalize an arbitrary word with coefficient
    static Element word(const Word& w, const Scalar& coeff = Scalar::one());

    [[nodiscard]] bool is_zero() const { return t_.empty(); }
    [[nodiscard]] const std::map<Monomial, Scalar>& terms() const { return t_; }
    [[nodiscard]] Scalar coeff(const Monomial& m) const;
    [[nodiscard]] bool pure_lorentz() const;  // no momentum generator
    [[nodiscard]] bool pure_momentum() const;

    friend Element operator+(const Element&, const Element&);
    friend Element operator-(const Element&, const Element&);
    friend Element operator*(const Element&, const Element&);
    friend Element operator*(const Scalar&, const Element&);
    Element operator-() const;
    Element& operator+=(const Element& o) { return *this = *this + o; }
    Element& operator-=(const Element& o) { return *this = *this - o; }
    Element& operator*=(const Element& o) { return *this = *this * o; }
    bool operator==(const Element&) const = default;

    [[nodiscard]] Element pow(int n) const;

    /// accumulate a (already normal-ordered) term; drops zero coefficients
    void add_term(const Monomial& m, const Scalar& s);

    [[nodiscard]] std::string str() const;

  private:
    std::map<Monomial, Scalar> t_;
};

/// xy - yx, normalized
Element commutator(const Element& x, const Element& y);

/// the *-involution: antilinear anti-homomorphism fixing coefficients
/// (q is real); E* = FK, F* = K^-1 E, K* = K, boost and momentum tables
/// per the defining *-structures
Element star(const Element& x);

// derived generators of the rotation algebra
Element j_minus();     ///< J- = q [2]^(-1/2) K F
Element j_plus();      ///< J+ = -[2]^(-1/2) E
Element j_three();     ///< J3 = [2]^-1 (q^-1 E F - q F E)
Element casimir_w();   ///< W = K - lam J3, the rotation Casimir
Element mass_casimir();///< m^2 = P0^2 + q^-1 P- P+ + q P+ P- - P3^2

std::string to_string(const Monomial& m);

}  // namespace qpoin
