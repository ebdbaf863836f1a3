#ifndef LOOPCALC_EXPR_HPP
#define LOOPCALC_EXPR_HPP

#include <cstddef>
#include <string>

#include "loopcalc/algebra.hpp"

namespace loopcalc {

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

/// Grammar (whitespace-insensitive):
///   element := term ('+' term)* ;  term := factor+ ;  factor := atom ('^' nat)? ;
///   atom := opseq? gen | '(' element ')' ;
///   opseq := 'Q[' nat (',' nat)* ']' | 'q[' nat (',' nat)* ']' ;
///   gen := 'x' nat | 'z' nat | 's' nat 'a' nat
/// 'q[...]' is lower-indexed and converted on parse; 's<m>a<j>' is the
/// stunted class Sigma^m a_j.  The result is normalized in `space`.
Element parse_expr(std::string_view text, const SpaceContext& space);

std::string to_string(const GenMonomial& gm);
std::string to_string(const Monomial& m);
std::string to_string(const Element& e);
std::string to_string(const TensorElement& t);

enum class Format { Text, Json };

/// Canonical text, or the JSON document
///   {"space":..., "dim":..., "monomials":[...], "string":...}
/// with sorted keys; byte-stable across runs.
std::string format_element(const Element& e, Format mode);

std::string format_tensor(const TensorElement& t, Format mode);

} // namespace loopcalc

#endif
