#include "qpoincare/element.hpp"
#include "qpoincare/rewrite.hpp"
#include <iostream>
#include <random>
using namespace qpoin;
int main() {
    std::mt19937_64 rng(99);
    int max_len = 10;
    for (int t = 0; t < 1200; ++t) {
        int len = 1 + static_cast<int>(rng() % max_len);
        Word w;
        for (int i = 0; i < len; ++i)
            w.push_back(static_cast<Gen>(rng() % kGenCount));
        std::string ws;
        for (Gen g : w) ws += std::string(gen_name(g)) + ".";
        try {
            FuzzReport rep;  // replicate the per-trial strategies directly
            Element base = Engine::instance().normalize(w, Scalar::one());
            (void)base;
            // run the three strategies through confluence_fuzz's machinery:
            // simplest: call confluence_fuzz with a crafted... instead just
            // time the full trial by rebuilding it via public API
        } catch (const IterationCapError&) {
            std::cout << "deterministic cap: " << t << " " << ws << "\n";
            return 1;
        }
        // now the strategies: emulate via confluence_fuzz? not exposed per
        // word. Use a single-trial fuzz with a seeded rng that reproduces w:
        // instead, directly call the internal path by running fuzz with
        // trials=t+1 would redo everything. Print progress markers only.
        if (t % 50 == 0) std::cerr << t << " " << ws << "\n";
    }
    return 0;
}
