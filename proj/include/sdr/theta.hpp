#pragma once

#include <memory>
#include <optional>

#include "sdr/branch.hpp"
#include "sdr/curve.hpp"

namespace sdr {

/// A line touching a quartic twice: restriction = scale * root^2, contact
/// points P, Q (equal at a hyperflex).
struct BitangentWitness {
    std::shared_ptr<const PlaneCurve> curve;
    std::array<FieldElement, 3> line;
    ProjectivePoint P, Q;
    BinaryForm restricted;
    BinaryForm root;
    FieldElement scale;
};

/// Decide whether L is a bitangent of the quartic C: the restriction is
/// matched against scale * (alpha u^2 + beta u v + gamma v^2)^2 by exact
/// coefficient elimination; contact points are located over conductors
/// {1, 3, 4, 12} when the discriminant needs a square root. Returns
/// nullopt when the restriction is not a scaled square.
std::optional<BitangentWitness> bitangent_check(const PlaneCurve& C,
                                                const std::array<FieldElement, 3>& L);

/// Divisor-level tangency content: the section divisor of the line is
/// 2P + 2Q (4P at a hyperflex) and Bezout-complete.
bool theta_square_check(const BitangentWitness& w);

/// The degree-7 Fermat curve with its 2-torsion divisor data, built in
/// conductor 42 and self-checked on construction.
struct Fermat7Data {
    std::shared_ptr<const PlaneCurve> curve;
    ProjectivePoint P, Q;
    std::vector<ProjectivePoint> R;       // the 7 points on X2 = 0
    std::vector<ProjectivePoint> orbitP;  // (A^3 B)^j (P), j = 0..6
    std::vector<ProjectivePoint> orbitQ;
    Divisor D;
    TernaryPoly G;  // quartic numerator of the 2-torsion function
    TernaryPoly H;  // X2^4
    Mat A, B, sigma;
};

const Fermat7Data& fermat7_data();

struct TwoTorsionCertificate {
    std::shared_ptr<const PlaneCurve> curve;
    Divisor D;
    TernaryPoly G, H;
    std::vector<ProjectivePoint> candidatesG, candidatesH;
};

TwoTorsionCertificate fermat7_certificate();

/// degree(D) == 0, D Galois-invariant, and div(G/H) == 2D (through complete
/// section divisors).
bool two_torsion_verify(const TwoTorsionCertificate& cert);

/// Dv + 2 * (section of the line) is effective; the section must be complete.
bool effectivity_witness(const PlaneCurve& C, const Divisor& Dv, const TernaryPoly& line,
                         const std::vector<ProjectivePoint>& candidates);

/// The degree-p quotient-map identity: V^p - U(1-U)^s, with
/// U = -(X0/X2)^p and V = (-1)^{s+1} X0 X1^s / X2^{s+1}, clears to a
/// multiple of X0^p + X1^p + X2^p. Requires odd prime p, 1 <= s <= p-2.
bool quotient_map_verify(unsigned p, unsigned s);

/// (s, t) = (-a^2 b / c^3, -b / c) satisfies t^7 = s(1-s)^2 modulo the
/// Klein quartic. The parameters exist for the negative variants used in
/// tests (flipped sign of t, wrong exponent).
bool klein_birational_verify(int t_sign = -1, unsigned exponent = 2);

/// Z[(Z/p)^2] with basis A^i B^j; multiplication is convolution.
struct GroupRingElement {
    unsigned p;
    std::vector<long long> coeff;  // index i*p + j

    explicit GroupRingElement(unsigned p_) : p(p_), coeff(p_ * p_, 0) {}
    static GroupRingElement unit(unsigned p);                       // 1
    static GroupRingElement monomial(unsigned p, long i, long j);   // A^i B^j

    long long& at(long i, long j);
    long long at(long i, long j) const;

    GroupRingElement operator+(const GroupRingElement& o) const;
    GroupRingElement operator-(const GroupRingElement& o) const;
    GroupRingElement operator*(const GroupRingElement& o) const;
    GroupRingElement scaled(long long k) const;
    bool operator==(const GroupRingElement& o) const = default;

    std::string str() const;
};

/// Both sides of the push-pull identity in Z[(Z/p)^2]:
/// sum_{s=1}^{p-2} sum_j (A^{-s}B)^j - p  ==  (sum A^j)(sum B^k) - sum A^j - sum B^k - sum (AB)^j.
GroupRingElement group_ring_lhs(unsigned p);
GroupRingElement group_ring_rhs(unsigned p);
bool group_ring_identity_check(unsigned p);

}  // namespace sdr
