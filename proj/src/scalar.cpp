#include "qpoincare/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace qpoin {

// ---------------------------------------------------------------- Poly

Poly::Poly(Int constant) {
    if (constant != 0) c_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::x(int power) {
    std::vector<Int> c(static_cast<size_t>(power) + 1);
    c.back() = 1;
    return Poly(std::move(c));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool Poly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

Int Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Int(0);
    return c_[static_cast<size_t>(i)];
}

const Int& Poly::lead() const {
    static const Int zero(0);
    return c_.empty() ? zero : c_.back();
}

int Poly::trailing_order() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return 0;
}

Int Poly::eval(const Int& x) const {
    Int v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

Rat Poly::eval(const Rat& x) const {
    Rat v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + Rat(*it);
    return v;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size()) c[i] += a.c_[i];
        if (i < b.c_.size()) c[i] += b.c_[i];
    }
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            c[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return Poly(std::move(c));
}

Int Poly::content() const {
    Int g = 0;
    for (const Int& x : c_) {
        if (x == 0) continue;
        g = boost::multiprecision::gcd(g, x);
        if (g == 1) break;
    }
    if (g == 0) return 0;
    return lead() < 0 ? Int(-g) : g;
}

Poly Poly::primitive() const {
    if (is_zero()) return {};
    Int cont = content();
    if (cont == 1) return *this;
    Poly r = *this;
    for (auto& x : r.c_) x /= cont;
    return r;
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    if (a.is_zero()) return {};
    if (a.deg() < b.deg()) throw Error("polynomial division not exact");
    std::vector<Int> rem = a.c_;
    std::vector<Int> quot(static_cast<size_t>(a.deg() - b.deg()) + 1);
    const Int& lb = b.lead();
    for (int k = a.deg() - b.deg(); k >= 0; --k) {
        Int& top = rem[static_cast<size_t>(k + b.deg())];
        if (top % lb != 0) throw Error("polynomial division not exact");
        Int f = top / lb;
        quot[static_cast<size_t>(k)] = f;
        if (f == 0) continue;
        for (int i = 0; i <= b.deg(); ++i)
            rem[static_cast<size_t>(k + i)] -= f * b.c_[static_cast<size_t>(i)];
    }
    for (const Int& x : rem)
        if (x != 0) throw Error("polynomial division not exact");
    return Poly(std::move(quot));
}

Poly Poly::gcd(Poly a, Poly b) {
    a = a.primitive();
    b = b.primitive();
    if (a.is_zero()) return b.is_zero() ? Poly(Int(1)) : b;
    if (b.is_zero()) return a;
    if (a.deg() < b.deg()) std::swap(a, b);
    while (!b.is_zero()) {
        // pseudo-remainder: lc(b)^(da-db+1) * a mod b, then primitive part
        int da = a.deg(), db = b.deg();
        std::vector<Int> rem(a.c_.begin(), a.c_.end());
        const Int& lb = b.lead();
        for (int k = da - db; k >= 0; --k) {
            Int top = rem[static_cast<size_t>(k + db)];
            if (top == 0) continue;
            for (int i = 0; i < static_cast<int>(rem.size()); ++i) {
                if (i >= k && i <= k + db) {
                    rem[static_cast<size_t>(i)] =
                        rem[static_cast<size_t>(i)] * lb -
                        top * b.c_[static_cast<size_t>(i - k)];
                } else {
                    rem[static_cast<size_t>(i)] *= lb;
                }
            }
        }
        Poly r = Poly(std::move(rem)).primitive();
        a = std::move(b);
        b = std::move(r);
    }
    return a.lead() < 0 ? (-a) : a;
}

std::pair<Poly, int> Poly::strip_x() const {
    if (is_zero()) return {Poly(), 0};
    int t = trailing_order();
    if (t == 0) return {*this, 0};
    std::vector<Int> c(c_.begin() + t, c_.end());
    return {Poly(std::move(c)), t};
}

Poly Poly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Int> c(static_cast<size_t>(k));
    c.insert(c.end(), c_.begin(), c_.end());
    return Poly(std::move(c));
}

Poly Poly::scaled(const Int& r) const {
    if (r == 0) return {};
    Poly out = *this;
    for (auto& x : out.c_) x *= r;
    return out;
}

// ---------------------------------------------------------------- PFrac

PFrac::PFrac() : coef_(0), num_(Int(1)), den_(Int(1)) {}

PFrac::PFrac(Rat r) : coef_(std::move(r)), num_(Int(1)), den_(Int(1)) {}

PFrac::PFrac(Poly num, Poly den)
    : coef_(1), num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    canonicalize();
}

PFrac::PFrac(Rat coef, int shift, Poly num, Poly den)
    : coef_(std::move(coef)), shift_(shift), num_(std::move(num)),
      den_(std::move(den)) {
    canonicalize();
}

void PFrac::canonicalize() {
    if (coef_ == 0 || num_.is_zero()) {
        coef_ = 0;
        shift_ = 0;
        num_ = Poly(Int(1));
        den_ = Poly(Int(1));
        return;
    }
    auto [n, tn] = num_.strip_x();
    auto [d, td] = den_.strip_x();
    shift_ += tn - td;
    Int cn = n.content();  // signed by leading coefficient
    Int cd = d.content();
    if (cn != 1) {
        n = n.primitive();
        coef_ *= Rat(cn);
    }
    if (cd != 1) {
        d = d.primitive();
        coef_ /= Rat(cd);
    }
    if (n.deg() > 0 && d.deg() > 0) {
        Poly g = Poly::gcd(n, d);
        if (g.deg() > 0) {
            n = Poly::exact_div(n, g);
            d = Poly::exact_div(d, g);
            // quotients of positive-lead primitives stay positive-lead
        }
    }
    num_ = std::move(n);
    den_ = std::move(d);
}

bool PFrac::is_one() const {
    return coef_ == 1 && shift_ == 0 && num_.is_one() && den_.is_one();
}

PFrac PFrac::p_pow(int k) { return {Rat(1), k, Poly(Int(1)), Poly(Int(1))}; }

PFrac operator*(const PFrac& a, const PFrac& b) {
    if (a.is_zero() || b.is_zero()) return {};
    // cross-cancel first to keep degrees down
    Poly n1 = a.num_, d2 = b.den_;
    if (n1.deg() > 0 && d2.deg() > 0) {
        Poly g = Poly::gcd(n1, d2);
        if (g.deg() > 0) {
            n1 = Poly::exact_div(n1, g);
            d2 = Poly::exact_div(d2, g);
        }
    }
    Poly n2 = b.num_, d1 = a.den_;
    if (n2.deg() > 0 && d1.deg() > 0) {
        Poly g = Poly::gcd(n2, d1);
        if (g.deg() > 0) {
            n2 = Poly::exact_div(n2, g);
            d1 = Poly::exact_div(d1, g);
        }
    }
    PFrac r;
    r.coef_ = a.coef_ * b.coef_;
    r.shift_ = a.shift_ + b.shift_;
    r.num_ = n1 * n2;
    r.den_ = d1 * d2;
    return r;
}

PFrac operator+(const PFrac& a, const PFrac& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    int s = std::min(a.shift_, b.shift_);
    // common rational scale 1/(va vb)
    Int ua = numerator(a.coef_), va = denominator(a.coef_);
    Int ub = numerator(b.coef_), vb = denominator(b.coef_);
    Poly g = Poly::gcd(a.den_, b.den_);
    Poly db_red = g.is_one() ? b.den_ : Poly::exact_div(b.den_, g);
    Poly da_red = g.is_one() ? a.den_ : Poly::exact_div(a.den_, g);
    Poly n = a.num_.scaled(ua * vb) * db_red;
    n = n.shifted(a.shift_ - s);
    Poly m = b.num_.scaled(ub * va) * da_red;
    m = m.shifted(b.shift_ - s);
    return {Rat(1) / Rat(va * vb), s, n + m, a.den_ * db_red};
}

PFrac operator-(const PFrac& a, const PFrac& b) { return a + (-b); }

PFrac PFrac::operator-() const {
    PFrac r = *this;
    r.coef_ = -r.coef_;
    return r;
}

PFrac PFrac::inverse() const {
    if (is_zero()) throw DivisionByZero();
    PFrac r;
    r.coef_ = 1 / coef_;
    r.shift_ = -shift_;
    r.num_ = den_;
    r.den_ = num_;
    return r;
}

PFrac operator/(const PFrac& a, const PFrac& b) { return a * b.inverse(); }

bool PFrac::pole_at_one() const { return den_.eval(Int(1)) == 0; }

Rat PFrac::value_at_one() const {
    Int d = den_.eval(Int(1));
    if (d == 0) throw PoleError("pole at q = 1");
    return coef_ * Rat(num_.eval(Int(1))) / Rat(d);
}

// ---------------------------------------------------------------- Scalar

namespace {
// [2] = p^2 + p^-2 as a fraction p^-2 (p^4 + 1)
const PFrac& beta_square() {
    static const PFrac t = PFrac(Poly(std::vector<Int>{1, 0, 0, 0, 1}),
                                 Poly::x(2));
    return t;
}
}  // namespace

Scalar Scalar::integer(long n) { return Scalar(PFrac(Rat(n)), PFrac()); }

Scalar Scalar::rational(const Rat& r) { return Scalar(PFrac(r), PFrac()); }

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw DivisionByZero();
    return rational(Rat(num) / den);
}

Scalar Scalar::p_pow(int k) { return Scalar(PFrac::p_pow(k), PFrac()); }

Scalar Scalar::lambda() {
    static const Scalar l = q_pow(1) - q_pow(-1);
    return l;
}

Scalar Scalar::bracket(int n) {
    if (n < 0) return -bracket(-n);
    // (q^n - q^-n)/(q - q^-1) = q^(n-1) + q^(n-3) + ... + q^(1-n)
    Scalar s = zero();
    for (int k = n - 1; k >= 1 - n; k -= 2) s += q_pow(k);
    return s;
}

Scalar Scalar::beta() { return Scalar(PFrac(), PFrac(Rat(1))); }

Scalar operator+(const Scalar& x, const Scalar& y) {
    return {x.a_ + y.a_, x.b_ + y.b_};
}

Scalar operator-(const Scalar& x, const Scalar& y) {
    return {x.a_ - y.a_, x.b_ - y.b_};
}

Scalar Scalar::operator-() const { return {-a_, -b_}; }

Scalar operator*(const Scalar& x, const Scalar& y) {
    if (x.b_.is_zero() && y.b_.is_zero()) return {x.a_ * y.a_, PFrac()};
    if (x.b_.is_zero()) return {x.a_ * y.a_, x.a_ * y.b_};
    if (y.b_.is_zero()) return {x.a_ * y.a_, x.b_ * y.a_};
    return {x.a_ * y.a_ + x.b_ * y.b_ * beta_square(),
            x.a_ * y.b_ + x.b_ * y.a_};
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (b_.is_zero()) return {a_.inverse(), PFrac()};
    // (a + b s2)^-1 = (a - b s2) / (a^2 - b^2 [2])
    PFrac d = a_ * a_ - b_ * b_ * beta_square();
    return {a_ / d, -(b_ / d)};
}

Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

Scalar Scalar::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    Scalar r = one(), base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

bool Scalar::has_pole_at_q1() const {
    return a_.pole_at_one() || b_.pole_at_one();
}

// ------------------------------------------------------- numeric evaluation

namespace {

bool rat_sqrt(const Rat& r, Rat& out) {
    if (r < 0) return false;
    Int n = boost::multiprecision::numerator(r);
    Int d = boost::multiprecision::denominator(r);
    Int sn = boost::multiprecision::sqrt(n), sd = boost::multiprecision::sqrt(d);
    if (sn * sn != n || sd * sd != d) return false;
    out = Rat(sn) / Rat(sd);
    return true;
}

// Exact arithmetic in Q(P, B) with P^2 = q, B^2 = q + 1/q. When one of the
// roots is rational (or B is a rational multiple of P) it is folded away so
// that the representation has no zero divisors and the zero test is exact.
struct NumCtx {
    Rat q, t;  // t = q + 1/q
    bool p_rat = false;
    Rat p;           // valid if p_rat
    int b_mode = 0;  // 0: independent, 1: rational, 2: rational multiple of P
    Rat b;           // value (mode 1) or multiplier (mode 2)

    explicit NumCtx(const Rat& qq) : q(qq), t(qq + 1 / qq) {
        p_rat = rat_sqrt(q, p);
        Rat r;
        if (rat_sqrt(t, r)) {
            b_mode = 1;
            b = r;
        } else if (!p_rat && rat_sqrt(t / q, r)) {
            b_mode = 2;  // B = r * P
            b = r;
        }
    }
};

// value = v[0] + v[1] P + (v[2] + v[3] P) B, with folded coordinates unused
struct NumVal {
    Rat v[4];
};

NumVal nv_add(const NumVal& x, const NumVal& y) {
    NumVal r;
    for (int i = 0; i < 4; ++i) r.v[i] = x.v[i] + y.v[i];
    return r;
}

NumVal nv_mul(const NumCtx& c, const NumVal& x, const NumVal& y) {
    Rat z[16];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) z[i * 4 + j] = x.v[i] * y.v[j];
    NumVal r;
    // basis products over (1, P, B, PB)
    r.v[0] = z[0] + c.q * z[5] + c.t * z[10] + c.q * c.t * z[15];
    r.v[1] = z[1] + z[4] + c.t * (z[11] + z[14]);
    r.v[2] = z[2] + z[8] + c.q * (z[7] + z[13]);
    r.v[3] = z[3] + z[6] + z[9] + z[12];
    return r;
}

NumVal nv_scale(const NumVal& x, const Rat& r) {
    NumVal out;
    for (int i = 0; i < 4; ++i) out.v[i] = x.v[i] * r;
    return out;
}

bool nv_zero(const NumVal& x) {
    return x.v[0] == 0 && x.v[1] == 0 && x.v[2] == 0 && x.v[3] == 0;
}

// fold rational roots into the lower coordinates
NumVal nv_canonical(const NumCtx& c, NumVal x) {
    if (c.b_mode == 1) {
        x.v[0] += c.b * x.v[2];
        x.v[1] += c.b * x.v[3];
        x.v[2] = x.v[3] = 0;
    } else if (c.b_mode == 2) {  // B = b P: (v2 + v3 P) B = b q v3 + b v2 P
        x.v[0] += c.b * c.q * x.v[3];
        x.v[1] += c.b * x.v[2];
        x.v[2] = x.v[3] = 0;
    }
    if (c.p_rat) {
        x.v[0] += c.p * x.v[1];
        x.v[2] += c.p * x.v[3];
        x.v[1] = x.v[3] = 0;
    }
    return x;
}

NumVal nv_inverse(const NumCtx& c, const NumVal& x0) {
    NumVal x = nv_canonical(c, x0);
    if (nv_zero(x)) throw PoleError("denominator vanishes at this q");
    NumVal conjB = x;
    conjB.v[2] = -conjB.v[2];
    conjB.v[3] = -conjB.v[3];
    NumVal d1 = nv_canonical(c, nv_mul(c, x, conjB));  // lands in Q(P)
    NumVal conjP = d1;
    conjP.v[1] = -conjP.v[1];
    NumVal d2 = nv_canonical(c, nv_mul(c, d1, conjP));  // rational
    if (d2.v[0] == 0) throw PoleError("denominator vanishes at this q");
    return nv_scale(nv_mul(c, conjB, conjP), 1 / d2.v[0]);
}

NumVal nv_eval_poly(const NumCtx& c, const Poly& poly) {
    NumVal p{};
    p.v[1] = 1;
    p = nv_canonical(c, p);
    NumVal acc{};
    for (int i = poly.deg(); i >= 0; --i) {
        acc = nv_mul(c, acc, p);
        acc.v[0] += Rat(poly.coeff(i));
    }
    return acc;
}

NumVal nv_eval_pfrac(const NumCtx& c, const PFrac& f) {
    if (f.is_zero()) return NumVal{};
    NumVal n = nv_eval_poly(c, f.num());
    NumVal d = nv_eval_poly(c, f.den());
    NumVal r = nv_mul(c, n, nv_inverse(c, d));
    r = nv_scale(r, f.coef());
    // apply the p^shift factor
    int s = f.shift();
    if (s != 0) {
        NumVal p{};
        p.v[1] = 1;
        p = nv_canonical(c, p);
        if (s < 0) p = nv_inverse(c, p);
        for (int i = 0; i < std::abs(s); ++i) r = nv_mul(c, r, p);
    }
    return r;
}

}  // namespace

double eval_numeric(const Scalar& s, double q) {
    if (!(q > 0)) throw DomainError("eval_numeric requires q > 0");
    NumCtx c{Rat(q)};
    NumVal r = nv_eval_pfrac(c, s.rational_part());
    if (!s.beta_part().is_zero()) {
        NumVal b = nv_eval_pfrac(c, s.beta_part());
        NumVal beta{};
        beta.v[2] = 1;
        r = nv_add(r, nv_canonical(c, nv_mul(c, b, beta)));
    }
    r = nv_canonical(c, r);
    auto d = [](const Rat& x) { return x.convert_to<double>(); };
    double qd = c.q.convert_to<double>();
    return d(r.v[0]) + d(r.v[1]) * std::sqrt(qd) +
           (d(r.v[2]) + d(r.v[3]) * std::sqrt(qd)) *
               std::sqrt(c.t.convert_to<double>());
}

Limit limit_q1(const Scalar& s) {
    Limit out;
    if (s.rational_part().pole_at_one() || s.beta_part().pole_at_one()) {
        out.kind = Limit::Kind::Pole;
        return out;
    }
    out.a = s.rational_part().is_zero() ? Rat(0)
                                        : s.rational_part().value_at_one();
    out.b = s.beta_part().is_zero() ? Rat(0) : s.beta_part().value_at_one();
    out.kind = (out.b == 0) ? Limit::Kind::Rational : Limit::Kind::Irrational;
    return out;
}

// ---------------------------------------------------------------- printing

std::string to_string(const Rat& r) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(r);
    if (boost::multiprecision::denominator(r) != 1)
        os << "/" << boost::multiprecision::denominator(r);
    return os.str();
}

namespace {

bool has_toplevel_sum(const std::string& s) {
    int depth = 0;
    for (size_t i = 0; i + 2 < s.size(); ++i) {
        if (s[i] == '(' || s[i] == '[') ++depth;
        if (s[i] == ')' || s[i] == ']') --depth;
        if (depth == 0 && s[i] == ' ' && (s[i + 1] == '+' || s[i + 1] == '-') &&
            s[i + 2] == ' ')
            return true;
    }
    return false;
}

// special factors recognized by the printer
const Poly& poly_lam_minus() {  // p^2 - 1
    static const Poly f(std::vector<Int>{-1, 0, 1});
    return f;
}
const Poly& poly_lam_plus() {  // p^2 + 1
    static const Poly f(std::vector<Int>{1, 0, 1});
    return f;
}
const Poly& poly_two() {  // p^4 + 1
    static const Poly f(std::vector<Int>{1, 0, 0, 0, 1});
    return f;
}

int extract_mult(Poly& p, const Poly& f) {
    int k = 0;
    while (p.deg() >= f.deg()) {
        try {
            p = Poly::exact_div(p, f);
            ++k;
        } catch (const Error&) {
            break;
        }
    }
    return k;
}

// print sum(c_i p^(i+shift)) scaled by rational r as a polynomial in q,
// with q^(k/2) for odd powers of p
std::string poly_q_string(const Poly& p, int shift, const Rat& scale) {
    std::ostringstream os;
    bool first = true;
    for (int i = p.deg(); i >= 0; --i) {
        Rat c = Rat(p.coeff(i)) * scale;
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        if (first && c < 0) os << "-";
        first = false;
        Rat ac = c < 0 ? Rat(-c) : c;
        int e = i + shift;  // power of p
        if (ac != 1 || e == 0) os << to_string(ac);
        if (e != 0) {
            if (ac != 1) os << "*";
            if (e == 2)
                os << "q";
            else if (e % 2 == 0)
                os << "q^" << e / 2;
            else
                os << "q^(" << e << "/2)";
        }
    }
    if (first) os << "0";
    return os.str();
}

struct FactorForm {
    Rat coef;
    int lam = 0;   // power of lam (negative: recognized inverse factor)
    int two = 0;   // power of [2] (negative only)
    int p = 0;     // residual power of p
    Poly numpoly;  // leftover numerator
    Poly denpoly;  // leftover denominator
};

FactorForm factored(const PFrac& f) {
    FactorForm out;
    out.coef = f.coef();
    out.p = f.shift();
    Poly n = f.num(), d = f.den();
    int a = extract_mult(n, poly_lam_minus()) - extract_mult(d, poly_lam_minus());
    int b = extract_mult(n, poly_lam_plus()) - extract_mult(d, poly_lam_plus());
    int m = extract_mult(n, poly_two()) - extract_mult(d, poly_two());
    // only inverse powers print as named factors; positive powers fold back
    // so lam itself prints expanded as (q - q^-1)
    int k = (a < 0 && b < 0) ? std::max(a, b) : 0;
    out.lam = k;
    out.two = m < 0 ? m : 0;
    a -= k;
    b -= k;
    for (int i = 0; i < m; ++i) n = n * poly_two();
    out.p += 2 * k + 2 * out.two;
    for (int i = 0; i < a; ++i) n = n * poly_lam_minus();
    for (int i = 0; i < -a; ++i) d = d * poly_lam_minus();
    for (int i = 0; i < b; ++i) n = n * poly_lam_plus();
    for (int i = 0; i < -b; ++i) d = d * poly_lam_plus();
    out.numpoly = n;
    out.denpoly = d;
    return out;
}

std::string pfrac_string(const PFrac& f) {
    if (f.is_zero()) return "0";
    FactorForm ff = factored(f);
    std::vector<std::string> factors;
    bool lead_minus = false;

    int nterms = 0;
    for (int i = 0; i <= ff.numpoly.deg(); ++i)
        if (ff.numpoly.coeff(i) != 0) ++nterms;

    if (nterms == 1) {
        int i = ff.numpoly.deg();
        Rat c = Rat(ff.numpoly.coeff(i)) * ff.coef;
        if (c < 0) {
            lead_minus = true;
            c = -c;
        }
        int e = i + ff.p;
        if (c != 1) factors.push_back(to_string(c));
        if (e == 2)
            factors.emplace_back("q");
        else if (e != 0 && e % 2 == 0)
            factors.push_back("q^" + std::to_string(e / 2));
        else if (e != 0)
            factors.push_back("q^(" + std::to_string(e) + "/2)");
    } else {
        factors.push_back("(" + poly_q_string(ff.numpoly, ff.p, ff.coef) + ")");
    }
    if (ff.lam != 0)
        factors.push_back(ff.lam == 1 ? "lam"
                                      : "lam^" + std::to_string(ff.lam));
    if (ff.two != 0)
        factors.push_back(ff.two == 1 ? "[2]"
                                      : "[2]^" + std::to_string(ff.two));
    if (!ff.denpoly.is_one())
        factors.push_back("(" + poly_q_string(ff.denpoly, 0, Rat(1)) + ")^-1");

    std::string s = lead_minus ? "-" : "";
    if (factors.empty()) return lead_minus ? "-1" : "1";
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) s += "*";
        s += factors[i];
    }
    return s;
}

}  // namespace

std::string Scalar::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (!a_.is_zero()) out = pfrac_string(a_);
    if (!b_.is_zero()) {
        std::string bs = pfrac_string(b_);
        std::string term;
        if (bs == "1")
            term = "s2";
        else if (bs == "-1")
            term = "-s2";
        else if (has_toplevel_sum(bs))
            term = "(" + bs + ")*s2";
        else
            term = bs + "*s2";
        if (out.empty()) {
            out = term;
        } else if (term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

}  // namespace qpoin
