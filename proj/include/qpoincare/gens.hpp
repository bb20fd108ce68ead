/**
 * @file gens.hpp
 * @brief The twelve generators of the q-Poincare algebra and index bases.
 *
 * Generator order IS the global normal-ordering precedence:
 * momenta, then rotations F, K^-1, K, E, then boosts a, b, c, d.
 * Normal words look like  P-block . F^i (K|Kinv)^j E^k . boost-block,
 * where the boost block is a^i b^j c^k or b^j c^k d^l (a and d never
 * coexist; both ad and da reduce).
 */
#pragma once

#include <cstdint>
#include <string_view>

namespace qpoin {

enum class Gen : uint8_t {
    P0 = 0,
    Pm,
    P3,
    Pp,
    F,
    Kinv,
    K,
    E,
    a,
    b,
    c,
    d,
};

inline constexpr int kGenCount = 12;

constexpr bool is_momentum(Gen g) { return g <= Gen::Pp; }
constexpr bool is_rotation(Gen g) { return g >= Gen::F && g <= Gen::E; }
constexpr bool is_boost(Gen g) { return g >= Gen::a; }
constexpr bool is_lorentz(Gen g) { return !is_momentum(g); }

constexpr std::string_view gen_name(Gen g) {
    constexpr std::string_view names[kGenCount] = {
        "P0", "Pm", "P3", "Pp", "F", "Kinv", "K", "E", "a", "b", "c", "d"};
    return names[static_cast<int>(g)];
}

// 4-vector indices in the basis order {0, -, +, 3}
inline constexpr int kMu0 = 0;
inline constexpr int kMuM = 1;
inline constexpr int kMuP = 2;
inline constexpr int kMu3 = 3;

constexpr Gen momentum_gen(int mu) {
    constexpr Gen g[4] = {Gen::P0, Gen::Pm, Gen::Pp, Gen::P3};
    return g[mu];
}

constexpr std::string_view mu_name(int mu) {
    constexpr std::string_view names[4] = {"0", "-", "+", "3"};
    return names[mu];
}

// 3-vector indices in the basis order {-, 3, +}, values {-1, 0, +1}
inline constexpr int kAm = 0;
inline constexpr int kA3 = 1;
inline constexpr int kAp = 2;

constexpr int a_value(int A) { return A - 1; }

/// embed a 3-index into the 4-vector basis {0,-,+,3}
constexpr int four_index(int A) {
    constexpr int m[3] = {kMuM, kMu3, kMuP};
    return m[A];
}

constexpr std::string_view a_name(int A) {
    constexpr std::string_view names[3] = {"-", "3", "+"};
    return names[A];
}

}  // namespace qpoin
