/**
 * @file scalar.hpp
 * @brief Exact coefficient field Q(p)[s2] with s2^2 = p^2 + p^-2.
 *
 * All symbolic computation in this library happens over the field obtained
 * from the rational functions Q(p) by adjoining one square root:
 *
 *   p   = q^(1/2)          (the base variable; q = p^2 everywhere)
 *   s2  = [2]^(1/2)        (formal square root of p^2 + p^-2 = q + q^-1)
 *
 * A Scalar is stored canonically as  A(p) + B(p)*s2  where A and B are
 * reduced fractions of integer-coefficient polynomials in p:
 *
 *   A = coef * p^shift * num / den
 *
 * with coef an exact rational, num and den primitive (unit content),
 * coprime, with positive leading coefficient and nonzero constant term.
 * Negative powers of p live in the shift, so the canonical form of a value
 * is unique and equality is representation equality. Polynomial gcds run
 * over the integers (primitive Euclid with pseudo-remainders), which keeps
 * coefficient growth polynomial. p^4+1 is irreducible over Q, hence the
 * extension is a field and every nonzero element is invertible:
 *
 *   (A + B*s2)^-1 = (A - B*s2) / (A^2 - B^2*(p^2+p^-2)).
 *
 * No floating point is used anywhere except in eval_numeric, which
 * substitutes an exact rational for q after full cancellation.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace qpoin {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero scalar") {}
};
struct PoleError : Error {
    using Error::Error;
};
struct DomainError : Error {
    using Error::Error;
};
struct IterationCapError : Error {
    using Error::Error;
};

/// Dense polynomial in p with integer coefficients. c[i] is the
/// coefficient of p^i; the zero polynomial has an empty vector.
class Poly {
  public:
    Poly() = default;
    explicit Poly(Int constant);
    explicit Poly(std::vector<Int> coeffs);

    static Poly x(int power = 1);

    [[nodiscard]] int deg() const { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    [[nodiscard]] bool is_one() const;
    [[nodiscard]] Int coeff(int i) const;
    [[nodiscard]] const Int& lead() const;
    /// index of the lowest nonzero coefficient (multiplicity of p)
    [[nodiscard]] int trailing_order() const;
    [[nodiscard]] Int eval(const Int& x) const;
    [[nodiscard]] Rat eval(const Rat& x) const;

    friend Poly operator+(const Poly&, const Poly&);
    friend Poly operator-(const Poly&, const Poly&);
    friend Poly operator*(const Poly&, const Poly&);
    Poly operator-() const;
    bool operator==(const Poly&) const = default;

    /// gcd of coefficients, sign of the leading coefficient
    [[nodiscard]] Int content() const;
    /// divide out the content, making the leading coefficient positive
    [[nodiscard]] Poly primitive() const;
    /// exact integer polynomial division; throws Error if not divisible
    static Poly exact_div(const Poly& a, const Poly& b);
    /// primitive gcd via pseudo-remainder Euclid, positive leading coeff
    static Poly gcd(Poly a, Poly b);
    /// divide by p^trailing_order, returning the stripped power
    [[nodiscard]] std::pair<Poly, int> strip_x() const;
    [[nodiscard]] Poly shifted(int k) const;  // multiply by p^k, k >= 0
    [[nodiscard]] Poly scaled(const Int& r) const;

  private:
    void trim();
    std::vector<Int> c_;
};

/// Rational function in p, canonical form coef * p^shift * num/den as
/// described in the file header; zero is coef = 0, shift = 0, num = den = 1.
class PFrac {
  public:
    PFrac();
    PFrac(Poly num, Poly den);
    explicit PFrac(Rat r);

    static PFrac p_pow(int k);

    [[nodiscard]] const Rat& coef() const { return coef_; }
    [[nodiscard]] int shift() const { return shift_; }
    [[nodiscard]] const Poly& num() const { return num_; }
    [[nodiscard]] const Poly& den() const { return den_; }
    [[nodiscard]] bool is_zero() const { return coef_ == 0; }
    [[nodiscard]] bool is_one() const;

    friend PFrac operator+(const PFrac&, const PFrac&);
    friend PFrac operator-(const PFrac&, const PFrac&);
    friend PFrac operator*(const PFrac&, const PFrac&);
    friend PFrac operator/(const PFrac&, const PFrac&);
    PFrac operator-() const;
    [[nodiscard]] PFrac inverse() const;
    bool operator==(const PFrac&) const = default;

    /// true if den vanishes at p = 1
    [[nodiscard]] bool pole_at_one() const;
    /// exact value at p = 1 (requires no pole there)
    [[nodiscard]] Rat value_at_one() const;

  private:
    PFrac(Rat coef, int shift, Poly num, Poly den);
    void canonicalize();  // strip p powers, contents, cross-gcd, signs
    Rat coef_;
    int shift_ = 0;
    Poly num_, den_;
};

/// Exact value of a scalar in the limit q -> 1 (p = 1, s2 = sqrt(2)).
struct Limit {
    enum class Kind { Rational, Irrational, Pole };
    Kind kind = Kind::Rational;
    Rat a;  ///< rational part
    Rat b;  ///< coefficient of sqrt(2); nonzero only for Kind::Irrational
};

class Scalar {
  public:
    Scalar() = default;
    Scalar(PFrac a, PFrac b) : a_(std::move(a)), b_(std::move(b)) {}

    static Scalar zero() { return {}; }
    static Scalar one() { return integer(1); }
    static Scalar integer(long n);
    static Scalar rational(const Rat& r);
    static Scalar rational(long num, long den);
    /// p^k, i.e. q^(k/2)
    static Scalar p_pow(int k);
    /// q^k
    static Scalar q_pow(int k) { return p_pow(2 * k); }
    /// lambda = q - q^-1
    static Scalar lambda();
    /// [n] = (q^n - q^-n)/(q - q^-1); [2] = q + q^-1
    static Scalar bracket(int n);
    /// s2 = [2]^(1/2)
    static Scalar beta();

    [[nodiscard]] const PFrac& rational_part() const { return a_; }
    [[nodiscard]] const PFrac& beta_part() const { return b_; }
    [[nodiscard]] bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    [[nodiscard]] bool is_one() const { return a_.is_one() && b_.is_zero(); }

    friend Scalar operator+(const Scalar&, const Scalar&);
    friend Scalar operator-(const Scalar&, const Scalar&);
    friend Scalar operator*(const Scalar&, const Scalar&);
    friend Scalar operator/(const Scalar&, const Scalar&);
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    bool operator==(const Scalar&) const = default;

    /// multiplicative inverse; throws DivisionByZero on zero
    [[nodiscard]] Scalar inverse() const;
    [[nodiscard]] Scalar pow(int k) const;

    /// true if the denominator of either part vanishes at p = 1
    [[nodiscard]] bool has_pole_at_q1() const;

    /// report form: polynomial in q, `s2` for the square root of [2],
    /// `lam` / `[2]` for recognized inverse factors
    [[nodiscard]] std::string str() const;

  private:
    PFrac a_, b_;  // value = a + b*s2
};

/// Substitute a concrete q > 0. Evaluation is exact in the field
/// Q(sqrt(q), sqrt(q+1/q)) and rounded to double once at the end.
/// Throws PoleError if a denominator vanishes at this q, DomainError
/// for q <= 0.
double eval_numeric(const Scalar& s, double q);

/// Exact q -> 1 limit after full cancellation; a vanishing denominator at
/// p = 1 reports Limit::Kind::Pole (a value, not an error).
Limit limit_q1(const Scalar& s);

std::string to_string(const Rat& r);

}  // namespace qpoin
