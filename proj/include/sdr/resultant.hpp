#pragma once

#include "sdr/ternary_poly.hpp"

namespace sdr {

/// Classical Macaulay resultant of three homogeneous ternary forms.
/// Zero exactly when the forms share a projective zero over the algebraic
/// closure. Computed as det(Macaulay matrix) / det(distinguished minor);
/// when the minor vanishes, retried under deterministic pseudo-random
/// coordinate changes (up to 8) and normalized back by det(T)^(d0*d1*d2).
/// Throws resultant_indeterminate if every retry hits a vanishing minor.
FieldElement macaulay_resultant(const TernaryPoly& f, const TernaryPoly& g, const TernaryPoly& h);

}  // namespace sdr
