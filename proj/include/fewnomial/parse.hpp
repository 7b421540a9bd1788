#pragma once

#include "fewnomial/binomial.hpp"
#include "fewnomial/bounds.hpp"
#include "fewnomial/ksum.hpp"

#include <string>
#include <string_view>

namespace fewnomial {

/// Terms `coeff * x1^e1 * x3 ...` joined by + and -. Coefficients are
/// integers, decimals or p/q; exponents are nonnegative integers. A bare
/// `x` means x1. With num_vars = 0 the count is the largest index used.
SparsePolynomial parse_polynomial(std::string_view text, Index num_vars = 0);
/// Inverse of parse_polynomial for a fixed variable count.
std::string format_polynomial(const SparsePolynomial& p);

/// Terms `[+|-] coeff [* x ^ exponent]` where the exponent is an integer,
/// a decimal or p/q, optionally parenthesised, e.g. `47*x^2.53 - x^-5.5`.
KSum parse_ksum(std::string_view text);
std::string format_ksum(const KSum& f);

/// Rows separated by `;` or newlines, entries by spaces or commas.
IntMatrix parse_matrix(std::string_view text);
/// Same layout with entries in the parse_rational syntax.
RationalMatrix parse_rational_matrix(std::string_view text);

/// {"n": 2, "equations": ["..."], "inequalities": ["..."]}; n is optional.
SparseSystem parse_system_json(std::string_view json_text);
/// {"D": [[...]], "c": [...], "R": ..., "epsilon": ...}. Numbers may be
/// JSON numbers or strings in the parse_rational syntax.
BinomialSystem parse_binomial_json(std::string_view json_text);

}  // namespace fewnomial
