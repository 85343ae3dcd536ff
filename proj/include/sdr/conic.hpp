#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sdr/pencil.hpp"
#include "sdr/rational.hpp"

namespace sdr {

/// Hilbert symbol (x, y)_v over Q at the place v: v = 0 means the real
/// place, otherwise v is a prime. Returns +1 or -1.
int hilbert_symbol(const Rational& x, const Rational& y, const mpz_class& v);

struct ConicDecision {
    Rational a, b, c;
    bool solvable = false;
    std::optional<std::array<mpz_class, 3>> witness;  // primitive, nonnegative
    std::vector<std::string> obstructions;            // places with symbol -1
};

/// Decide a X0^2 + b X1^2 + c X2^2 = 0 over Q by the local symbols at the
/// real place and the primes of 2abc; when solvable, produce a witness by
/// bounded search on the squarefree pairwise-coprime reduction (classical
/// height bounds, so termination is guaranteed). Throws degenerate_input
/// when abc = 0.
ConicDecision conic_has_rational_point(const Rational& a, const Rational& b, const Rational& c);

/// A verified 2x2 symmetric pencil for the diagonal conic, when it has a
/// rational point: the witness is moved onto the unit-form model through a
/// hyperbolic basis and the model pencil is pulled back.
std::optional<SymmetricPencil> conic_representation(const Rational& a, const Rational& b,
                                                    const Rational& c);

/// The diagonal conic as a polynomial over Q.
TernaryPoly diagonal_conic(const Rational& a, const Rational& b, const Rational& c);

}  // namespace sdr
