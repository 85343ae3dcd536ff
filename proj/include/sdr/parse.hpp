#pragma once

#include <string>

#include "sdr/field.hpp"
#include "sdr/ternary_poly.hpp"

namespace sdr {

/// Polynomial grammar over X0, X1, X2: integer/rational coefficients,
/// cyclotomic generator token z<m>, operators + - * ^ and parentheses.
/// parse_poly(print(f)) == f on canonical forms.
TernaryPoly parse_poly(const std::string& text, const FieldContext& ctx);

/// Single scalar in the element grammar ("a", "a/b", "z42^3-1", ...).
FieldElement parse_element(const std::string& text, const FieldContext& ctx);

}  // namespace sdr
