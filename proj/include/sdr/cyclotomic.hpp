#pragma once

#include <cstdint>
#include <vector>

#include "sdr/rational.hpp"

namespace sdr {

unsigned euler_phi(unsigned m);

/// Coefficients c_0..c_{phi(m)} of the m-th cyclotomic polynomial
/// (monic, computed by exact division of t^m - 1 by the proper Phi_d).
std::vector<Rational> cyclotomic_polynomial(unsigned m);

/// Reduction data for Q(zeta_m) in the power basis 1, t, ..., t^{phi-1}
/// modulo Phi_m. power_mod[j] is t^j reduced, for 0 <= j < m (usable for
/// Galois twists and embeddings since t^m = 1 in the quotient).
struct CyclotomicTable {
    unsigned m = 1;
    unsigned phi = 1;
    std::vector<Rational> phi_poly;
    std::vector<std::vector<Rational>> power_mod;

    using Elem = std::vector<Rational>;  // length phi

    Elem zero() const { return Elem(phi); }
    Elem one() const;
    Elem generator() const;  // zeta_m
    Elem from_rational(const Rational& r) const;

    bool is_zero(const Elem& a) const;
    bool is_rational(const Elem& a) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;

    /// Image under t -> t^k (k need not be reduced mod m).
    Elem galois(const Elem& a, unsigned k) const;

    /// Evaluate the represented polynomial at t = given reduced power list,
    /// used by embeddings into a larger conductor.
    std::vector<Rational> lift(const Elem& a) const { return a; }
};

const CyclotomicTable& cyclotomic_table(unsigned m);

/// Units of Z/m in increasing order.
std::vector<unsigned> units_mod(unsigned m);

}  // namespace sdr
