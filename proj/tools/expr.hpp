#pragma once

#include <string>

#include "skeinlab/skein_pt.hpp"

namespace skeinlab::cli {

/// Parse a skein-algebra expression over the generators X1, X2, X3 with
/// integer and A-power coefficients, e.g. "X2*X1 + A^2*X3" or
/// "A^{-1/2}*X1*X1". Grammar: sum of products of factors; a factor is an
/// integer, A^e with e an integer or half-integer (written e or {p/2} or
/// (p/2)), a generator, or a parenthesized subexpression. The result is in
/// normal form by construction.
SkeinPTElement parse_skein_expr(const std::string& text);

}  // namespace skeinlab::cli
