#include "qpoincare/element.hpp"
#include "qpoincare/rewrite.hpp"
#include <iostream>
#include <map>
#include <random>
using namespace qpoin;
using G = Gen;
int main(int argc, char** argv) {
    Word w = {G::b, G::b, G::F, G::F, G::d, G::a, G::P3, G::Pm, G::P3, G::P3};
    uint64_t seed = argc > 1 ? std::stoull(argv[1]) : 1;
    std::mt19937_64 rng(seed);
    const auto& eng = Engine::instance();
    std::map<Word, Scalar> pending;
    pending[w] = Scalar::one();
    Element done;
    long firings = 0;
    size_t peak = 0;
    while (!pending.empty()) {
        auto it = std::prev(pending.end());
        Word cur = it->first;
        Scalar c = std::move(it->second);
        pending.erase(it);
        if (c.is_zero()) continue;
        auto rs = eng.redexes(cur);
        if (rs.empty()) { done.add_term(Monomial{cur}, c); continue; }
        auto r = rs[rng() % rs.size()];
        ++firings;
        peak = std::max(peak, pending.size());
        if (firings % 2000000 == 0)
            std::cerr << "firings " << firings << " pending " << pending.size()
                      << " done " << done.terms().size() << "\n";
        if (firings > 200000000L) { std::cout << "GAVE UP\n"; return 2; }
        for (auto& [nw, nc] : eng.fire(cur, r)) {
            Scalar add = c * nc;
            if (add.is_zero()) continue;
            auto [ip, ins] = pending.try_emplace(std::move(nw), add);
            if (!ins) { ip->second += add; if (ip->second.is_zero()) pending.erase(ip); }
        }
    }
    Element base = eng.normalize(w, Scalar::one());
    std::cout << "TERMINATED seed=" << seed << " firings=" << firings
              << " peak=" << peak << " equal=" << (done == base) << "\n";
    return 0;
}
