#include "qpoincare/rewrite.hpp"

#include <atomic>
#include <cstdlib>
#include <random>
#include <sstream>

#include "qpoincare/hopf.hpp"
#include "qpoincare/repr.hpp"

namespace qpoin {

namespace {

std::atomic<long> g_cap{0};

long initial_cap() {
    if (const char* env = std::getenv("QPOIN_ITER_CAP")) {
        long v = std::atol(env);
        if (v > 0) return v;
    }
    return 1'000'000;
}

std::string word_str(const Word& w) {
    std::string s;
    for (Gen g : w) {
        if (!s.empty()) s += "*";
        s += gen_name(g);
    }
    return s.empty() ? "1" : s;
}

}  // namespace

long Engine::iteration_cap() {
    long v = g_cap.load();
    if (v == 0) {
        v = initial_cap();
        g_cap.store(v);
    }
    return v;
}

void Engine::set_iteration_cap(long cap) { g_cap.store(cap); }

const Engine& Engine::instance() {
    static const Engine e;
    return e;
}

Engine::Engine() {
    const Scalar one = Scalar::one();
    const Scalar q = Scalar::q_pow(1);
    const Scalar qi = Scalar::q_pow(-1);
    const Scalar q2 = Scalar::q_pow(2);
    const Scalar q2i = Scalar::q_pow(-2);
    const Scalar lam = Scalar::lambda();
    const Scalar lam_inv = lam.inverse();

    auto add = [&](Gen x, Gen y, RuleRhs rhs) {
        table_[static_cast<int>(x)][static_cast<int>(y)] = std::move(rhs);
        has_rule_[static_cast<int>(x)][static_cast<int>(y)] = true;
    };
    using G = Gen;

    // momentum block: P0 central, the epsilon-tensor relations oriented
    // toward P0 < Pm < P3 < Pp
    for (G pa : {G::Pm, G::P3, G::Pp}) add(pa, G::P0, {{one, {G::P0, pa}}});
    add(G::P3, G::Pm,
        {{q2i, {G::Pm, G::P3}}, {qi * lam, {G::P0, G::Pm}}});
    add(G::Pp, G::P3,
        {{q2i, {G::P3, G::Pp}}, {qi * lam, {G::P0, G::Pp}}});
    add(G::Pp, G::Pm,
        {{one, {G::Pm, G::Pp}},
         {-lam, {G::P3, G::P3}},
         {lam, {G::P0, G::P3}}});

    // rotations: F < Kinv < K < E
    add(G::K, G::Kinv, {{one, {}}});
    add(G::Kinv, G::K, {{one, {}}});
    add(G::K, G::F, {{q2i, {G::F, G::K}}});
    add(G::Kinv, G::F, {{q2, {G::F, G::Kinv}}});
    add(G::E, G::K, {{q2i, {G::K, G::E}}});
    add(G::E, G::Kinv, {{q2, {G::Kinv, G::E}}});
    add(G::E, G::F,
        {{one, {G::F, G::E}}, {lam_inv, {G::K}}, {-lam_inv, {G::Kinv}}});

    // boosts: a < b < c < d; both da and ad reduce
    add(G::b, G::a, {{q, {G::a, G::b}}});
    add(G::c, G::a, {{q, {G::a, G::c}}});
    add(G::d, G::b, {{q, {G::b, G::d}}});
    add(G::d, G::c, {{q, {G::c, G::d}}});
    add(G::c, G::b, {{one, {G::b, G::c}}});
    add(G::d, G::a, {{one, {}}, {q, {G::b, G::c}}});
    add(G::a, G::d, {{one, {}}, {qi, {G::b, G::c}}});

    // boosts across rotations: the Drinfeld-double cross relations
    const Scalar p3 = Scalar::p_pow(3), p3n = -p3;
    const Scalar pi = Scalar::p_pow(-1), pin = -pi;
    const Scalar p5i = Scalar::p_pow(-5);
    add(G::a, G::E, {{q, {G::E, G::a}}, {p3n, {G::b}}});
    add(G::b, G::E, {{qi, {G::E, G::b}}});
    add(G::c, G::E, {{q, {G::E, G::c}}, {p3, {G::K, G::a}}, {p3n, {G::d}}});
    add(G::d, G::E, {{qi, {G::E, G::d}}, {pi, {G::K, G::b}}});
    add(G::a, G::F, {{q, {G::F, G::a}}, {pi, {G::c}}});
    add(G::b, G::F, {{q, {G::F, G::b}}, {pin, {G::Kinv, G::a}}, {pi, {G::d}}});
    add(G::c, G::F, {{qi, {G::F, G::c}}});
    add(G::d, G::F, {{qi, {G::F, G::d}}, {-p5i, {G::Kinv, G::c}}});
    add(G::a, G::K, {{one, {G::K, G::a}}});
    add(G::b, G::K, {{q2i, {G::K, G::b}}});
    add(G::c, G::K, {{q2, {G::K, G::c}}});
    add(G::d, G::K, {{one, {G::K, G::d}}});
    add(G::a, G::Kinv, {{one, {G::Kinv, G::a}}});
    add(G::b, G::Kinv, {{q2, {G::Kinv, G::b}}});
    add(G::c, G::Kinv, {{q2i, {G::Kinv, G::c}}});
    add(G::d, G::Kinv, {{one, {G::Kinv, G::d}}});

    // Lorentz generators across momenta, generated from the coproduct legs
    // and the 4-vector representation: h P_nu -> P_mu Lambda(h_(1))^mu_nu h_(2)
    for (G h : {G::F, G::Kinv, G::K, G::E, G::a, G::b, G::c, G::d}) {
        for (int nu = 0; nu < 4; ++nu) {
            RuleRhs rhs;
            for (const auto& [leg1, leg2] : coproduct_legs(h)) {
                SMat lam1 = SMat::identity(4);
                for (Gen g : leg1) lam1 = lam1 * lambda_gen(g);
                for (int mu = 0; mu < 4; ++mu) {
                    const Scalar& c = lam1.at(mu, nu);
                    if (c.is_zero()) continue;
                    Word w{momentum_gen(mu)};
                    w.insert(w.end(), leg2.begin(), leg2.end());
                    rhs.push_back({c, std::move(w)});
                }
            }
            add(h, momentum_gen(nu), std::move(rhs));
        }
    }
}

const RuleRhs* Engine::rule(Gen x, Gen y) const {
    if (!has_rule_[static_cast<int>(x)][static_cast<int>(y)]) return nullptr;
    return &table_[static_cast<int>(x)][static_cast<int>(y)];
}

int Engine::first_redex(const Word& w, Redex& out) const {
    for (int i = 0; i + 1 < static_cast<int>(w.size()); ++i) {
        if (rule(w[i], w[i + 1])) {
            out = {i, i + 1};
            return 1;
        }
    }
    // adjacent-irreducible words are sorted; the only remaining pattern is
    // a ... d separated by b's and c's
    for (int i = 0; i < static_cast<int>(w.size()); ++i) {
        if (w[i] != Gen::a) continue;
        for (int j = i + 1; j < static_cast<int>(w.size()); ++j) {
            if (w[j] == Gen::b || w[j] == Gen::c) continue;
            if (w[j] == Gen::d) {
                out = {i, j};
                return 1;
            }
            break;
        }
    }
    return 0;
}

std::vector<Engine::Redex> Engine::redexes(const Word& w) const {
    std::vector<Redex> out;
    for (int i = 0; i + 1 < static_cast<int>(w.size()); ++i)
        if (rule(w[i], w[i + 1])) out.push_back({i, i + 1});
    for (int i = 0; i < static_cast<int>(w.size()); ++i) {
        if (w[i] != Gen::a) continue;
        for (int j = i + 2; j < static_cast<int>(w.size()); ++j) {
            bool gap_ok = true;
            for (int k = i + 1; k < j; ++k)
                if (w[k] != Gen::b && w[k] != Gen::c) gap_ok = false;
            if (gap_ok && w[j] == Gen::d) out.push_back({i, j});
            if (!gap_ok) break;
        }
    }
    return out;
}

std::vector<std::pair<Word, Scalar>> Engine::fire(const Word& w,
                                                  const Redex& r) const {
    std::vector<std::pair<Word, Scalar>> out;
    auto splice = [&](const Word& mid, const Scalar& c) {
        Word nw(w.begin(), w.begin() + r.pos);
        nw.insert(nw.end(), mid.begin(), mid.end());
        nw.insert(nw.end(), w.begin() + r.end + 1, w.end());
        out.emplace_back(std::move(nw), c);
    };
    if (r.end == r.pos + 1) {
        const RuleRhs* rr = rule(w[r.pos], w[r.end]);
        for (const auto& t : *rr) splice(t.word, t.coeff);
        return out;
    }
    // separated pair: a (bc-word) d = q^-k (bc-word)(ad)
    Word mid(w.begin() + r.pos + 1, w.begin() + r.end);
    int k = static_cast<int>(mid.size());
    splice(mid, Scalar::q_pow(-k));
    Word mid_bc = mid;
    mid_bc.push_back(Gen::b);
    mid_bc.push_back(Gen::c);
    splice(mid_bc, Scalar::q_pow(-k - 1));
    return out;
}

bool Engine::is_normal(const Word& w) const {
    Redex r;
    return !first_redex(w, r);
}

Element Engine::normalize(const Word& w, const Scalar& coeff) const {
    if (coeff.is_zero()) return {};
    {
        Redex r;
        if (!first_redex(w, r)) {
            Element out;
            out.add_term(Monomial{w}, coeff);
            return out;
        }
    }
    // the rules never change, so normal forms of whole words are cacheable
    static thread_local std::map<Word, Element> cache;
    if (auto it = cache.find(w); it != cache.end()) return coeff * it->second;

    // merged worklist: identical intermediate words combine coefficients,
    // which keeps the reduction tree polynomial in practice
    std::map<Word, Scalar> pending;
    pending.emplace(w, Scalar::one());
    Element out;
    long firings = 0;
    const long cap = iteration_cap();
    while (!pending.empty()) {
        auto itp = std::prev(pending.end());
        Word cur = itp->first;
        Scalar c = std::move(itp->second);
        pending.erase(itp);
        if (c.is_zero()) continue;
        Redex r;
        if (!first_redex(cur, r)) {
            out.add_term(Monomial{std::move(cur)}, c);
            continue;
        }
        if (++firings > cap) {
            throw IterationCapError("rewrite iteration cap exceeded on word " +
                                    word_str(cur));
        }
        for (auto& [nw, nc] : fire(cur, r)) {
            Scalar add = c * nc;
            if (add.is_zero()) continue;
            auto [ip, inserted] = pending.try_emplace(std::move(nw), add);
            if (!inserted) {
                ip->second += add;
                if (ip->second.is_zero()) pending.erase(ip);
            }
        }
    }
    if (w.size() <= 24 && cache.size() < 200000) cache.emplace(w, out);
    return coeff * out;
}

// ------------------------------------------------------------------ fuzz

namespace {

// Normalize under a configurable redex choice: 0 fires the leftmost redex
// of each word, 1 the rightmost, 2 a seeded-random one -- three genuinely
// different reduction orders. The worklist itself always pops the largest
// pending word so that coefficient merging keeps the tree small; the final
// result is independent of that bookkeeping.
Element normalize_with_strategy(const Word& start, int strategy,
                                std::mt19937_64& rng) {
    const auto& eng = Engine::instance();
    std::map<Word, Scalar> pending;
    pending[start] = Scalar::one();
    Element done;
    long firings = 0;
    const long cap = Engine::iteration_cap();
    while (!pending.empty()) {
        auto it = std::prev(pending.end());
        Word w = it->first;
        Scalar c = std::move(it->second);
        pending.erase(it);
        if (c.is_zero()) continue;
        auto rs = eng.redexes(w);
        if (rs.empty()) {
            done.add_term(Monomial{w}, c);
            continue;
        }
        Engine::Redex r;
        switch (strategy) {
            case 0: r = rs.front(); break;
            case 1: r = rs.back(); break;
            default: r = rs[rng() % rs.size()];
        }
        if (++firings > cap)
            throw IterationCapError("fuzz iteration cap exceeded");
        for (auto& [nw, nc] : eng.fire(w, r)) {
            Scalar add = c * nc;
            if (add.is_zero()) continue;
            auto [ip, inserted] = pending.try_emplace(std::move(nw), add);
            if (!inserted) {
                ip->second += add;
                if (ip->second.is_zero()) pending.erase(ip);
            }
        }
    }
    return done;
}

}  // namespace

FuzzReport confluence_fuzz(uint64_t seed, int trials, int max_len) {
    FuzzReport rep;
    rep.trials = trials;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        int len = max_len <= 1 ? 1 : 1 + static_cast<int>(rng() % max_len);
        Word w;
        for (int i = 0; i < len; ++i)
            w.push_back(static_cast<Gen>(rng() % kGenCount));
        Element base = Engine::instance().normalize(w, Scalar::one());
        bool mismatch = false;
        for (int strat : {0, 1, 2}) {
            try {
                Element alt = normalize_with_strategy(w, strat, rng);
                if (!(alt == base)) mismatch = true;
            } catch (const IterationCapError&) {
                // a strategy that exhausts its firing budget leaves this
                // word unverified; report it rather than abort the run
                ++rep.incomplete;
                rep.witnesses.push_back(word_str(w) + " (strategy " +
                                        std::to_string(strat) +
                                        " hit the iteration cap)");
            }
        }
        if (mismatch) {
            ++rep.mismatches;
            rep.witnesses.push_back(word_str(w));
        }
    }
    return rep;
}

}  // namespace qpoin
