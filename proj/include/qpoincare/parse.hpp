/**
 * @file parse.hpp
 * @brief Expression grammar for algebra elements and the printer that
 *        round-trips with it.
 *
 * Grammar (whitespace-insensitive, juxtaposition is the noncommutative
 * product):
 *
 *   expr   := term (('+'|'-') term)*
 *   term   := factor ('*'? factor)*
 *   factor := atom ('^' exponent)?
 *   atom   := symbol | literal | '(' expr ')'
 *   exponent := int | '(' int '/' 2 ')'     (half-integer powers of q only)
 *
 * Symbols: the generators E F K Kinv a b c d P0 Pm Pp P3 and the derived
 * W J3 Jp Jm (expanded at parse time). Literals: integers, rationals n/m,
 * q, qh (= q^(1/2)), s2 (= [2]^(1/2)), lam (= q - q^-1), [n] brackets.
 * Negative generator powers exist only for K and Kinv. Scalar
 * subexpressions may be raised to negative powers.
 */
#pragma once

#include <string>

#include "qpoincare/element.hpp"

namespace qpoin {

struct ParseError : Error {
    ParseError(const std::string& msg, size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
    size_t position;
};

/// parse an expression into a normal-ordered element
Element parse(const std::string& text);

/// canonical text form; parse(print(e)) == e
std::string print(const Element& e);

}  // namespace qpoin
