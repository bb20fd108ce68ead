/// Tensor squares and cubes of the Lorentz subalgebra, with both legs kept
/// in normal form; the coassociativity check nests coproducts through
/// Tensor3.
#pragma once

#include <map>
#include <string>
#include <utility>

#include "qpoincare/element.hpp"

namespace qpoin {

class Tensor2 {
  public:
    Tensor2() = default;
    static Tensor2 zero() { return {}; }
    static Tensor2 unit();
    static Tensor2 of(const Element& x, const Element& y);

    [[nodiscard]] bool is_zero() const { return t_.empty(); }
    [[nodiscard]] const std::map<std::pair<Monomial, Monomial>, Scalar>&
    terms() const {
        return t_;
    }

    void add_term(const Monomial& x, const Monomial& y, const Scalar& s);

    friend Tensor2 operator+(const Tensor2&, const Tensor2&);
    friend Tensor2 operator-(const Tensor2&, const Tensor2&);
    /// componentwise product (x (x) y)(u (x) v) = xu (x) yv
    friend Tensor2 operator*(const Tensor2&, const Tensor2&);
    friend Tensor2 operator*(const Scalar&, const Tensor2&);
    bool operator==(const Tensor2&) const = default;

    [[nodiscard]] std::string str() const;

  private:
    std::map<std::pair<Monomial, Monomial>, Scalar> t_;
};

class Tensor3 {
  public:
    Tensor3() = default;

    [[nodiscard]] bool is_zero() const { return t_.empty(); }
    void add_term(const Monomial& x, const Monomial& y, const Monomial& z,
                  const Scalar& s);
    bool operator==(const Tensor3&) const = default;

    [[nodiscard]] const std::map<std::tuple<Monomial, Monomial, Monomial>,
                                 Scalar>&
    terms() const {
        return t_;
    }

  private:
    std::map<std::tuple<Monomial, Monomial, Monomial>, Scalar> t_;
};

}  // namespace qpoin
