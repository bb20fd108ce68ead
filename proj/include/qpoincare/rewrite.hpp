/**
 * @file rewrite.hpp
 * @brief Oriented rewriting system producing the unique normal order.
 *
 * Every relation of the algebra is oriented toward the global precedence:
 * momenta move left, rotations before boosts, K K^-1 cancels, and words
 * containing both a and d reduce through ad = 1 + q^-1 bc. The cross rules
 * between Lorentz generators and momenta (one per generator and momentum,
 * h P_nu -> P_mu Lambda(h_(1))^mu_nu h_(2)) are generated once at startup
 * from the coproduct table and the 4-vector representation.
 *
 * Termination is enforced by an iteration cap (default 10^6 rule firings
 * per normalization, override with the QPOIN_ITER_CAP environment variable
 * or set_iteration_cap). Confluence is an empirically tested property --
 * see confluence_fuzz -- not a proved one.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qpoincare/element.hpp"

namespace qpoin {

struct RewriteTerm {
    Scalar coeff;
    Word word;
};
using RuleRhs = std::vector<RewriteTerm>;

class Engine {
  public:
    static const Engine& instance();

    /// deterministic leftmost-innermost normalization
    Element normalize(const Word& w, const Scalar& coeff) const;

    [[nodiscard]] bool is_normal(const Word& w) const;

    /// a redex is a replaceable span [pos, end] of a word: an adjacent pair
    /// or a separated a ... d pair with only b, c between
    struct Redex {
        int pos;
        int end;
    };
    [[nodiscard]] std::vector<Redex> redexes(const Word& w) const;
    /// fire one redex; returns the replacement terms for the full word
    [[nodiscard]] std::vector<std::pair<Word, Scalar>> fire(
        const Word& w, const Redex& r) const;

    static long iteration_cap();
    static void set_iteration_cap(long cap);

  private:
    Engine();
    [[nodiscard]] const RuleRhs* rule(Gen x, Gen y) const;
    [[nodiscard]] int first_redex(const Word& w, Redex& out) const;

    RuleRhs table_[kGenCount][kGenCount];
    bool has_rule_[kGenCount][kGenCount] = {};
};

/// Normalize one word under several admissible reduction orders and compare.
struct FuzzReport {
    int trials = 0;
    int mismatches = 0;
    int incomplete = 0;  // strategy runs that exhausted the iteration cap
    std::vector<std::string> witnesses;  // offending words with context
};

/// Random words of length <= max_len, each reduced with leftmost, rightmost
/// and seeded-random strategies; any normal-form disagreement is reported
/// with the witness word. Deterministic for a fixed seed.
FuzzReport confluence_fuzz(uint64_t seed, int trials, int max_len);

}  // namespace qpoin
