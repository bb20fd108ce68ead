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
            Element base = Engine::instance().normalize(w, Scalar::one());
            (void)base;
        } catch (const IterationCapError& e) {
            std::cout << "DETERMINISTIC cap at trial " << t << ": " << ws << "\n";
            return 1;
        }
        if (t % 100 == 0) std::cerr << "trial " << t << " ok (" << ws << ")\n";
    }
    std::cout << "deterministic path survives all 1200 words\n";
    return 0;
}
