#include "qpoincare/repr.hpp"

#include <cmath>
#include <sstream>

#include "qpoincare/hopf.hpp"
#include "qpoincare/pauli_lubanski.hpp"

namespace qpoin {

SMat SMat::inverse() const {
    if (rows_ != cols_) throw DomainError("inverse of non-square matrix");
    SMat a = *this;
    SMat inv = SMat::identity(rows_);
    for (int col = 0; col < cols_; ++col) {
        int pivot = -1;
        for (int r = col; r < rows_; ++r)
            if (!a.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw DomainError("singular matrix");
        if (pivot != col) {
            for (int j = 0; j < cols_; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        }
        Scalar d = a.at(col, col).inverse();
        for (int j = 0; j < cols_; ++j) {
            a.at(col, j) = d * a.at(col, j);
            inv.at(col, j) = d * inv.at(col, j);
        }
        for (int r = 0; r < rows_; ++r) {
            if (r == col || a.at(r, col).is_zero()) continue;
            Scalar f = a.at(r, col);
            for (int j = 0; j < cols_; ++j) {
                a.at(r, j) -= f * a.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

// --------------------------------------------------------------- metrics

Scalar eta_up(int mu, int nu) {
    if (mu == kMu0 && nu == kMu0) return Scalar::one();
    if (mu == kMuM && nu == kMuP) return Scalar::q_pow(-1);
    if (mu == kMuP && nu == kMuM) return Scalar::q_pow(1);
    if (mu == kMu3 && nu == kMu3) return -Scalar::one();
    return Scalar::zero();
}

Scalar eta_dn(int mu, int nu) { return eta_up(mu, nu); }

Scalar g3_up(int A, int B) {
    if (A == kAm && B == kAp) return -Scalar::q_pow(-1);
    if (A == kA3 && B == kA3) return Scalar::one();
    if (A == kAp && B == kAm) return -Scalar::q_pow(1);
    return Scalar::zero();
}

Scalar g3_dn(int A, int B) { return g3_up(A, B); }

Scalar eps_up(int A, int B, int C) {
    if (C == kAm) {
        if (A == kAm && B == kA3) return Scalar::q_pow(-1);
        if (A == kA3 && B == kAm) return -Scalar::q_pow(1);
    } else if (C == kA3) {
        if (A == kAm && B == kAp) return Scalar::one();
        if (A == kAp && B == kAm) return -Scalar::one();
        if (A == kA3 && B == kA3) return -Scalar::lambda();
    } else {
        if (A == kA3 && B == kAp) return Scalar::q_pow(-1);
        if (A == kAp && B == kA3) return -Scalar::q_pow(1);
    }
    return Scalar::zero();
}

Scalar eps_mixed(int A, int B, int C) {
    Scalar s = Scalar::zero();
    for (int D = 0; D < 3; ++D) s += g3_dn(A, D) * eps_up(D, B, C);
    return s;
}

// ---------------------------------------------------------------- Lambda

namespace {

SMat lambda_j(int A) {
    SMat m(4, 4);
    for (int B = 0; B < 3; ++B)
        for (int C = 0; C < 3; ++C)
            m.at(four_index(B), four_index(C)) = eps_mixed(A, B, C);
    return m;
}

SMat build_lambda(Gen h) {
    const Scalar lam = Scalar::lambda();
    const Scalar two = Scalar::bracket(2);
    const Scalar beta = Scalar::beta();
    switch (h) {
        case Gen::a: {
            SMat m = SMat::identity(4);
            // [4][2]^-2 = (q^2+q^-2)/[2]
            m.at(0, 0) = (Scalar::q_pow(2) + Scalar::q_pow(-2)) / two;
            m.at(0, 3) = Scalar::q_pow(1) * lam / two;
            m.at(3, 0) = Scalar::q_pow(-1) * lam / two;
            m.at(3, 3) = Scalar::integer(2) / two;
            return m;
        }
        case Gen::d: {
            SMat m = SMat::identity(4);
            m.at(0, 0) = (Scalar::q_pow(2) + Scalar::q_pow(-2)) / two;
            m.at(0, 3) = -Scalar::q_pow(-1) * lam / two;
            m.at(3, 0) = -Scalar::q_pow(1) * lam / two;
            m.at(3, 3) = Scalar::integer(2) / two;
            return m;
        }
        case Gen::b: {
            SMat m(4, 4);
            Scalar s = Scalar::p_pow(-1) * lam * beta / two;  // q^-1/2 lam [2]^-1/2
            m.at(0, 1) = -s;
            m.at(2, 0) = s;
            m.at(2, 3) = s;
            m.at(3, 1) = s;
            return m;
        }
        case Gen::c: {
            SMat m(4, 4);
            Scalar s = -Scalar::p_pow(1) * lam * beta / two;
            m.at(0, 2) = -s;
            m.at(1, 0) = s;
            m.at(1, 3) = s;
            m.at(3, 2) = s;
            return m;
        }
        case Gen::E:
            return (-beta) * lambda_j(kAp);
        case Gen::K: {
            // Lambda(W) + lam Lambda(J3), W acting as 1 on spin 0 and as
            // the spin-1 Casimir value on the 3-block
            SMat m = lam * lambda_j(kA3);
            Scalar w1 = casimir_w_value(2);
            m.at(0, 0) += Scalar::one();
            for (int i = 1; i < 4; ++i) m.at(i, i) += w1;
            return m;
        }
        case Gen::Kinv:
            return build_lambda(Gen::K).inverse();
        case Gen::F:
            return Scalar::q_pow(-1) * beta *
                   (build_lambda(Gen::Kinv) * lambda_j(kAm));
        default:
            throw DomainError("lambda of a momentum generator");
    }
}

}  // namespace

const SMat& lambda_gen(Gen h) {
    static const std::array<SMat, 8> mats = [] {
        std::array<SMat, 8> out{SMat(4, 4), SMat(4, 4), SMat(4, 4), SMat(4, 4),
                                SMat(4, 4), SMat(4, 4), SMat(4, 4), SMat(4, 4)};
        for (int i = 0; i < 8; ++i)
            out[static_cast<size_t>(i)] =
                build_lambda(static_cast<Gen>(i + 4));
        return out;
    }();
    if (is_momentum(h)) throw DomainError("lambda of a momentum generator");
    return mats[static_cast<size_t>(h) - 4];
}

SMat lambda_of(const Element& h) {
    SMat out(4, 4);
    for (const auto& [m, s] : h.terms()) {
        if (m.has_momentum()) throw DomainError("lambda of a momentum element");
        SMat prod = SMat::identity(4);
        for (Gen g : m.w) prod = prod * lambda_gen(g);
        out = out + s * prod;
    }
    return out;
}

Scalar casimir_w_value(int twice_j) {
    // highest weight: W |j,j> = (q^2j - lam [2]^-1 q^-1 [2j]) |j,j>
    return Scalar::q_pow(twice_j) - Scalar::lambda() / Scalar::bracket(2) *
                                        Scalar::q_pow(-1) *
                                        Scalar::bracket(twice_j);
}

// ----------------------------------------------------------- validation

std::vector<CheckResult> check_lambda() {
    std::vector<CheckResult> out;
    const Gen hgens[] = {Gen::F, Gen::Kinv, Gen::K, Gen::E,
                         Gen::a, Gen::b,    Gen::c, Gen::d};

    // homomorphism across every relation: Lambda(normal form of g g') must
    // equal Lambda(g) Lambda(g')
    for (Gen g1 : hgens)
        for (Gen g2 : hgens) {
            SMat lhs = lambda_of(Element::word({g1, g2}));
            SMat rhs = lambda_gen(g1) * lambda_gen(g2);
            std::string id = std::string("lambda/hom/") +
                             std::string(gen_name(g1)) + "." +
                             std::string(gen_name(g2));
            out.push_back(check(id, lhs == rhs, "entries differ"));
        }

    // metric law: eta^{nu nu'} Lambda(h)^{mu'}_{nu'} eta_{mu' mu}
    //   = Lambda(S h)^nu_mu
    for (Gen g : hgens) {
        const SMat& L = lambda_gen(g);
        SMat lhs(4, 4);
        for (int nu = 0; nu < 4; ++nu)
            for (int mu = 0; mu < 4; ++mu) {
                Scalar s = Scalar::zero();
                for (int nup = 0; nup < 4; ++nup)
                    for (int mup = 0; mup < 4; ++mup)
                        s += eta_up(nu, nup) * L.at(mup, nup) *
                             eta_dn(mup, mu);
                lhs.at(nu, mu) = s;
            }
        SMat rhs = lambda_of(antipode(Element::gen(g)));
        out.push_back(check("lambda/metric-law/" + std::string(gen_name(g)),
                            lhs == rhs, "eta conjugation != Lambda(S h)"));
    }

    // *-compatibility of the action: (h |> P_nu)* = (S h)* |> P_nu*
    for (Gen g : hgens)
        for (int nu = 0; nu < 4; ++nu) {
            Element lhs =
                star(module_action(Element::gen(g),
                                   Element::gen(momentum_gen(nu))));
            Element rhs = module_action(star(antipode(Element::gen(g))),
                                        star(Element::gen(momentum_gen(nu))));
            std::string id = std::string("lambda/star-action/") +
                             std::string(gen_name(g)) + ".P" +
                             std::string(mu_name(nu));
            out.push_back(check(id, lhs == rhs, "star compatibility broken"));
        }
    return out;
}

// --------------------------------------------------------------- R-matrix

SMat rmatrix4() {
    static const SMat r = [] {
        SMat m(16, 16);
        const HMat& lp = l_plus();
        for (int nu = 0; nu < 4; ++nu)
            for (int tau = 0; tau < 4; ++tau) {
                SMat block = lambda_of(lp.at(nu, tau));
                for (int mu = 0; mu < 4; ++mu)
                    for (int sg = 0; sg < 4; ++sg)
                        m.at(4 * mu + nu, 4 * sg + tau) = block.at(mu, sg);
            }
        return m;
    }();
    return r;
}

SMat rmatrix4_inv() {
    static const SMat r = rmatrix4().inverse();
    return r;
}

// --------------------------------------------------------------- SpinRep

namespace {

double qbracket(double q, double n) {
    return (std::pow(q, n) - std::pow(q, -n)) / (q - 1.0 / q);
}

double residual_max(const std::vector<double>& m, int n) {
    double r = 0;
    for (int i = 0; i < n * n; ++i) r = std::max(r, std::fabs(m[i]));
    return r;
}

}  // namespace

SpinRep spin_rep(int twice_j, double q) {
    if (twice_j < 0 || twice_j > 4)
        throw DomainError("spin_rep supports j in {0, 1/2, 1, 3/2, 2}");
    if (!(q > 1.0)) throw DomainError("spin_rep requires q > 1");
    SpinRep rep;
    rep.twice_j = twice_j;
    rep.q = q;
    int n = twice_j + 1;
    rep.e.assign(static_cast<size_t>(n) * n, 0.0);
    rep.f.assign(static_cast<size_t>(n) * n, 0.0);
    rep.k.assign(static_cast<size_t>(n) * n, 0.0);
    // basis index r has m = j - r (twice_m = twice_j - 2r)
    for (int r = 0; r < n; ++r) {
        double tm = (twice_j - 2.0 * r) / 2.0;  // m
        double tj = twice_j / 2.0;              // j
        rep.k[static_cast<size_t>(r) * n + r] = std::pow(q, 2.0 * tm);
        if (r > 0) {  // E |j,m> = sqrt([j-m][j+m+1]) |j,m+1>
            double amp = std::sqrt(qbracket(q, tj - tm) *
                                   qbracket(q, tj + tm + 1.0));
            rep.e[static_cast<size_t>(r - 1) * n + r] = amp;
        }
        if (r + 1 < n) {  // F |j,m> = sqrt([j+m][j-m+1]) |j,m-1>
            double amp = std::sqrt(qbracket(q, tj + tm) *
                                   qbracket(q, tj - tm + 1.0));
            rep.f[static_cast<size_t>(r + 1) * n + r] = amp;
        }
    }
    // defining relations must hold to 1e-9
    std::vector<double> res(static_cast<size_t>(n) * n, 0.0);
    double lam = q - 1.0 / q;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double ef = 0, fe = 0;
            for (int k = 0; k < n; ++k) {
                ef += rep.e[static_cast<size_t>(i) * n + k] *
                      rep.f[static_cast<size_t>(k) * n + j];
                fe += rep.f[static_cast<size_t>(i) * n + k] *
                      rep.e[static_cast<size_t>(k) * n + j];
            }
            double kk = (i == j) ? rep.k[static_cast<size_t>(i) * n + i] : 0;
            double kinv = (i == j) ? 1.0 / kk : 0;
            res[static_cast<size_t>(i) * n + j] =
                ef - fe - (i == j ? (kk - kinv) / lam : 0.0);
        }
    if (residual_max(res, n) > 1e-9)
        throw DomainError("spin_rep relations violated");
    // K E K^-1 = q^2 E (K diagonal, so entrywise)
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double e = rep.e[static_cast<size_t>(i) * n + j];
            if (e == 0) continue;
            double ratio = rep.k[static_cast<size_t>(i) * n + i] /
                           rep.k[static_cast<size_t>(j) * n + j];
            if (std::fabs(e * (ratio - q * q)) > 1e-9)
                throw DomainError("spin_rep relations violated");
        }
    return rep;
}

}  // namespace qpoin
