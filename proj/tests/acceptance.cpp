// Acceptance runner: executes every verification suite against its wall
// budget and prints one pass/fail line per criterion. Exit 0 only when all
// criteria pass within budget.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "qpoincare/verify.hpp"

using namespace qpoin;

namespace {

struct Criterion {
    int number;
    const char* name;
    const char* suite;
    double budget_s;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "relation tables", "relations", 5.0},
        {2, "hopf axioms", "hopf", 1.0},
        {3, "4-vector representation and R-matrix", "lambda", 30.0},
        {4, "pauli-lubanski properties", "pl", 60.0},
        {5, "spin casimir", "casimir", 60.0},
        {6, "classical limit", "limit", 5.0},
        {7, "little algebras", "little", 30.0},
        {8, "confluence fuzz", "fuzz", 120.0},
        {9, "negative controls", "negative", 120.0},
    };
    VerifyOptions opts;  // seed 1, 500 trials, words up to length 8

    bool all_ok = true;
    for (const auto& cr : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<CheckResult> checks;
        std::string error;
        try {
            checks = run_suite(cr.suite, opts);
        } catch (const std::exception& e) {
            error = e.what();
        }
        double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
        int passed = 0;
        std::vector<std::string> failures;
        for (const auto& c : checks) {
            if (c.status == Status::Pass) {
                ++passed;
            } else {
                failures.push_back(c.id + " [" + c.witness + "]");
            }
        }
        bool ok = error.empty() && failures.empty() &&
                  passed == static_cast<int>(checks.size()) &&
                  secs <= cr.budget_s;
        all_ok = all_ok && ok;
        std::printf("criterion %d (%s): %s  (%d/%zu checks, %.2fs, budget %.0fs)\n",
                    cr.number, cr.name, ok ? "PASS" : "FAIL", passed,
                    checks.size(), secs, cr.budget_s);
        if (!error.empty()) std::printf("    error: %s\n", error.c_str());
        for (const auto& f : failures)
            std::printf("    failed: %s\n", f.c_str());
        if (failures.empty() && error.empty() && secs > cr.budget_s)
            std::printf("    over budget by %.2fs\n", secs - cr.budget_s);
        std::fflush(stdout);
    }
    std::printf(all_ok ? "acceptance: PASS\n" : "acceptance: FAIL\n");
    return all_ok ? 0 : 1;
}
