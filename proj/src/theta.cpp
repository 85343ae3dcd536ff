#include "sdr/theta.hpp"

#include <sstream>

#include "sdr/errors.hpp"
#include "sdr/parse.hpp"

namespace sdr {

namespace {

// sqrt of a squarefree integer in the smallest cyclotomic field among
// conductors {1, 3, 4, 12}; nullopt when none of them contains it.
std::optional<FieldElement> sqrt_of_squarefree(long d0) {
    if (d0 == 1) return FieldElement::integer(FieldContext::Q(), 1);
    if (d0 == -1) return FieldElement::zeta(4);
    if (d0 == -3) {
        // (1 + 2 zeta_3)^2 = -3
        auto z = FieldElement::zeta(3);
        return FieldElement::integer(z.context(), 1) + z.times_integer(2);
    }
    if (d0 == 3) {
        // zeta_12 + zeta_12^11 = 2 cos(pi/6)
        auto z = FieldElement::zeta(12);
        return z + z.pow(11);
    }
    return std::nullopt;
}

// sqrt of a rational in a small cyclotomic extension: d = (s^2) * d0 with
// d0 squarefree, sqrt(d) = s * sqrt(d0).
std::optional<FieldElement> sqrt_of_rational(const Rational& d) {
    if (d.is_zero()) return FieldElement::zero(FieldContext::Q());
    mpz_class t = d.numerator() * d.denominator();
    int sign = sgn(t) < 0 ? -1 : 1;
    mpz_class n = abs(t);
    mpz_class square_part = 1, free_part = 1;
    for (mpz_class f = 2; f * f <= n; ++f) {
        while (mpz_divisible_p(n.get_mpz_t(), mpz_class(f * f).get_mpz_t())) {
            n /= f * f;
            square_part *= f;
        }
        while (mpz_divisible_p(n.get_mpz_t(), f.get_mpz_t())) {
            n /= f;
            free_part *= f;
        }
    }
    free_part *= n;
    if (free_part > 1000000) return std::nullopt;  // keep the desk-scale promise honest
    long d0 = sign * free_part.get_si();
    auto root0 = sqrt_of_squarefree(d0);
    if (!root0) return std::nullopt;
    Rational scale(square_part);
    scale /= Rational(d.denominator());
    return *root0 * FieldElement::from_rational(root0->context(), scale);
}

}  // namespace

std::optional<BitangentWitness> bitangent_check(const PlaneCurve& C,
                                                const std::array<FieldElement, 3>& L) {
    if (C.degree() != 4) throw error("bitangent test needs a quartic curve");
    const FieldContext& ctx = C.context();
    std::array<FieldElement, 3> Le{L[0].embed(ctx), L[1].embed(ctx), L[2].embed(ctx)};
    BinaryForm b = restrict_to_line(C.poly(), Le);
    if (b.is_zero()) throw error("line is a component of the quartic");

    // match b against scale * (alpha u^2 + beta u v + gamma v^2)^2
    auto zero = FieldElement::zero(ctx);
    auto one = FieldElement::one(ctx);
    auto half = FieldElement::from_rational(ctx, Rational(1, 2));
    FieldElement alpha = zero, beta = zero, gamma = zero, scale = zero;
    const auto& bc = b.coeff;  // bc[i] multiplies u^{4-i} v^i
    if (!bc[0].is_zero()) {
        alpha = one;
        scale = bc[0];
        beta = bc[1] / scale * half;
        gamma = (bc[2] / scale - beta * beta) * half;
        if (bc[3] != (beta * gamma * scale).times_integer(2)) return std::nullopt;
        if (bc[4] != gamma * gamma * scale) return std::nullopt;
    } else if (!bc[1].is_zero()) {
        return std::nullopt;  // alpha = 0 forces the u^3 v coefficient to vanish
    } else if (!bc[2].is_zero()) {
        beta = one;
        scale = bc[2];
        gamma = bc[3] / scale * half;
        if (bc[4] != gamma * gamma * scale) return std::nullopt;
    } else if (!bc[3].is_zero()) {
        return std::nullopt;  // u v^3 alone is never a square
    } else {
        gamma = one;
        scale = bc[4];
    }

    // contact parameters = projective roots of alpha u^2 + beta u v + gamma v^2
    auto par = parametrize_line(ctx, Le);
    std::optional<ProjectivePoint> P, Q;
    if (!alpha.is_zero()) {
        FieldElement disc = beta * beta - alpha * gamma * FieldElement::integer(ctx, 4);
        if (disc.is_zero()) {
            FieldElement u = -(beta / (alpha.times_integer(2)));
            auto pt = par.point_at(u, one);
            P = ProjectivePoint(pt[0], pt[1], pt[2]);
            Q = P;
        } else {
            if (!disc.is_rational_valued())
                throw error("extension-needed: contact discriminant is irrational");
            auto root = sqrt_of_rational(disc.rational_value());
            if (!root)
                throw error("extension-needed: contact field outside conductors {1,3,4,12}");
            auto uctx = unify(ctx, root->context());
            if (!uctx) throw context_mismatch("contact extension incompatible with curve");
            FieldElement r = root->embed(*uctx);
            FieldElement a2 = alpha.embed(*uctx).times_integer(2);
            FieldElement bb = beta.embed(*uctx);
            auto parE = parametrize_line(*uctx, {Le[0].embed(*uctx), Le[1].embed(*uctx),
                                                 Le[2].embed(*uctx)});
            auto oneE = FieldElement::one(*uctx);
            auto mk = [&](const FieldElement& u) {
                auto pt = parE.point_at(u, oneE);
                return ProjectivePoint(pt[0], pt[1], pt[2]);
            };
            P = mk((-bb + r) / a2);
            Q = mk((-bb - r) / a2);
        }
    } else if (!beta.is_zero()) {
        // roots (1 : 0) and (-gamma : beta)
        auto p1 = par.point_at(one, zero);
        auto p2 = par.point_at(-gamma, beta);
        P = ProjectivePoint(p1[0], p1[1], p1[2]);
        Q = ProjectivePoint(p2[0], p2[1], p2[2]);
    } else {
        auto p1 = par.point_at(one, zero);
        P = ProjectivePoint(p1[0], p1[1], p1[2]);
        Q = P;
    }

    BinaryForm root = BinaryForm::zero(ctx, 2);
    root.coeff[0] = alpha;
    root.coeff[1] = beta;
    root.coeff[2] = gamma;
    return BitangentWitness{std::make_shared<const PlaneCurve>(C), Le, *P, *Q, b, root, scale};
}

bool theta_square_check(const BitangentWitness& w) {
    TernaryPoly line(w.curve->context());
    for (int i = 0; i < 3; ++i) {
        Monomial m;
        m.e[i] = 1;
        line.add_term(m, w.line[i]);
    }
    std::vector<ProjectivePoint> cand{w.P};
    bool doubled = w.P == w.Q;
    if (!doubled) cand.push_back(w.Q);
    SectionDivisor sec = section_divisor(*w.curve, line, cand);
    if (!sec.complete) return false;
    std::vector<Divisor::Entry> want;
    if (doubled)
        want.push_back({w.P, 4});
    else {
        want.push_back({w.P, 2});
        want.push_back({w.Q, 2});
    }
    return sec.divisor.equals(Divisor(w.curve, std::move(want)));
}

namespace {

Fermat7Data build_fermat7() {
    const FieldContext ctx = FieldContext::cyclo(42);
    auto one = FieldElement::one(ctx);
    auto z42 = FieldElement::zeta(42);
    FieldElement eps = z42.pow(3);    // primitive 14th root
    FieldElement zeta = eps * eps;    // primitive 7th root
    FieldElement eta = z42.pow(7);    // primitive 6th root

    TernaryPoly F = parse_poly("X0^7+X1^7+X2^7", ctx);
    auto curve = std::make_shared<const PlaneCurve>(F);

    Fermat7Data d{curve,
                  ProjectivePoint(eta, eta.inverse(), -one),
                  ProjectivePoint(eta.inverse(), eta, -one),
                  {},
                  {},
                  {},
                  Divisor(curve),
                  // the numerator quartic of the 2-torsion function
                  parse_poly("X0^3*X1+X1^3*X2+X2^3*X0", ctx),
                  parse_poly("X2^4", ctx),
                  Mat(ctx, 3, 3),
                  Mat(ctx, 3, 3),
                  Mat(ctx, 3, 3)};

    for (int i = 0; i < 3; ++i) d.A.at(i, i) = one;
    d.A.at(0, 0) = zeta;
    for (int i = 0; i < 3; ++i) d.B.at(i, i) = one;
    d.B.at(1, 1) = zeta;
    d.sigma.at(0, 1) = one;
    d.sigma.at(1, 2) = one;
    d.sigma.at(2, 0) = one;

    for (unsigned j = 0; j < 7; ++j)
        d.R.emplace_back(eps * zeta.pow(j), one, FieldElement::zero(ctx));

    Mat A3B = d.A * d.A * d.A * d.B;
    ProjectivePoint p = d.P, q = d.Q;
    for (unsigned j = 0; j < 7; ++j) {
        d.orbitP.push_back(p);
        d.orbitQ.push_back(q);
        p = p.apply(A3B);
        q = q.apply(A3B);
    }

    std::vector<Divisor::Entry> entries;
    for (unsigned j = 0; j < 7; ++j) {
        entries.push_back({d.orbitP[j], 1});
        entries.push_back({d.orbitQ[j], 1});
        entries.push_back({d.R[j], -2});
    }
    d.D = Divisor(curve, std::move(entries));

    // self-checks; a failure here is a construction bug, not an input error
    for (const auto& pt : d.orbitP)
        if (!curve->contains(pt)) throw error("orbit point off the curve");
    for (const auto& pt : d.orbitQ)
        if (!curve->contains(pt)) throw error("orbit point off the curve");
    for (const auto& pt : d.R)
        if (!curve->contains(pt)) throw error("infinity point off the curve");
    if (d.D.support_size() != 21) throw error("two-torsion divisor support is not 21 points");
    if (d.D.degree() != 0) throw error("two-torsion divisor degree is nonzero");
    return d;
}

}  // namespace

const Fermat7Data& fermat7_data() {
    static const Fermat7Data data = build_fermat7();
    return data;
}

TwoTorsionCertificate fermat7_certificate() {
    const Fermat7Data& d = fermat7_data();
    std::vector<ProjectivePoint> candG = d.orbitP;
    candG.insert(candG.end(), d.orbitQ.begin(), d.orbitQ.end());
    return TwoTorsionCertificate{d.curve, d.D, d.G, d.H, std::move(candG), d.R};
}

bool two_torsion_verify(const TwoTorsionCertificate& cert) {
    if (cert.D.degree() != 0) return false;
    if (!cert.D.galois_invariant()) return false;
    auto check = divisor_of_function_verify(*cert.curve, cert.G, cert.H, cert.D.scaled(2),
                                            cert.candidatesG, cert.candidatesH);
    return check.ok;
}

bool effectivity_witness(const PlaneCurve& C, const Divisor& Dv, const TernaryPoly& line,
                         const std::vector<ProjectivePoint>& candidates) {
    auto d = line.homogeneous_degree();
    if (!d || *d != 1) throw error("effectivity witness needs a line section");
    SectionDivisor sec = section_divisor(C, line, candidates);
    if (!sec.complete)
        throw error("incomplete section: found " + std::to_string(sec.total) + " of " +
                    std::to_string(sec.bezout));
    return (Dv + sec.divisor.scaled(2)).is_effective();
}

bool quotient_map_verify(unsigned p, unsigned s) {
    if (p < 3 || !is_prime_u32(p)) throw error("quotient map needs an odd prime degree");
    if (s < 1 || s > p - 2) throw error("quotient map exponent out of range 1..p-2");
    FieldContext ctx = FieldContext::Q();
    TernaryPoly X0p = TernaryPoly::variable(ctx, 0, p);
    TernaryPoly X1 = TernaryPoly::variable(ctx, 1);
    TernaryPoly X2p = TernaryPoly::variable(ctx, 2, p);
    // cleared form of V^p - U(1-U)^s over X2^{p(s+1)}
    TernaryPoly term1 = X0p * X1.pow(s * p);
    if ((s + 1) % 2 == 1) term1 = -term1;
    TernaryPoly term2 = X0p * (X0p + X2p).pow(s);
    TernaryPoly E = term1 + term2;
    TernaryPoly F = X0p + X1.pow(p) + X2p;
    return E.exact_divide(F).has_value();
}

bool klein_birational_verify(int t_sign, unsigned exponent) {
    FieldContext ctx = FieldContext::Q();
    TernaryPoly a = TernaryPoly::variable(ctx, 0);
    TernaryPoly b = TernaryPoly::variable(ctx, 1);
    TernaryPoly c = TernaryPoly::variable(ctx, 2);
    // t = t_sign * b / c, s = -a^2 b / c^3; clear t^7 - s(1-s)^e over c^{3e+3} and c^7
    TernaryPoly t7_num = b.pow(7) * FieldElement::integer(ctx, t_sign);
    TernaryPoly one_minus_s_num = c.pow(3) + a.pow(2) * b;  // over c^3
    TernaryPoly s_term_num = -(a.pow(2) * b * one_minus_s_num.pow(exponent));  // over c^{3e+3}
    TernaryPoly N = t7_num * c.pow(3 * (exponent + 1)) - s_term_num * c.pow(7);
    TernaryPoly K = parse_poly("X0^3*X1+X1^3*X2+X2^3*X0", ctx);
    return N.exact_divide(K).has_value();
}

GroupRingElement GroupRingElement::unit(unsigned p) {
    GroupRingElement e(p);
    e.coeff[0] = 1;
    return e;
}

GroupRingElement GroupRingElement::monomial(unsigned p, long i, long j) {
    GroupRingElement e(p);
    e.at(i, j) = 1;
    return e;
}

long long& GroupRingElement::at(long i, long j) {
    long ii = ((i % (long)p) + p) % (long)p;
    long jj = ((j % (long)p) + p) % (long)p;
    return coeff[(std::size_t)(ii * (long)p + jj)];
}

long long GroupRingElement::at(long i, long j) const {
    return const_cast<GroupRingElement*>(this)->at(i, j);
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
    GroupRingElement r = *this;
    for (std::size_t i = 0; i < coeff.size(); ++i) r.coeff[i] += o.coeff[i];
    return r;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const {
    GroupRingElement r = *this;
    for (std::size_t i = 0; i < coeff.size(); ++i) r.coeff[i] -= o.coeff[i];
    return r;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
    GroupRingElement r(p);
    for (unsigned i = 0; i < p; ++i)
        for (unsigned j = 0; j < p; ++j) {
            long long c = coeff[i * p + j];
            if (c == 0) continue;
            for (unsigned k = 0; k < p; ++k)
                for (unsigned l = 0; l < p; ++l) {
                    long long d = o.coeff[k * p + l];
                    if (d == 0) continue;
                    r.coeff[((i + k) % p) * p + ((j + l) % p)] += c * d;
                }
        }
    return r;
}

GroupRingElement GroupRingElement::scaled(long long k) const {
    GroupRingElement r = *this;
    for (auto& c : r.coeff) c *= k;
    return r;
}

std::string GroupRingElement::str() const {
    std::ostringstream out;
    bool first = true;
    for (unsigned i = 0; i < p; ++i)
        for (unsigned j = 0; j < p; ++j) {
            long long c = coeff[i * p + j];
            if (c == 0) continue;
            std::string mono;
            if (i) mono += "A" + (i > 1 ? "^" + std::to_string(i) : std::string());
            if (j) {
                if (!mono.empty()) mono += "*";
                mono += "B" + (j > 1 ? "^" + std::to_string(j) : std::string());
            }
            long long mag = c < 0 ? -c : c;
            std::string piece;
            if (mono.empty())
                piece = std::to_string(mag);
            else if (mag == 1)
                piece = mono;
            else
                piece = std::to_string(mag) + "*" + mono;
            if (first) {
                out << (c < 0 ? "-" : "") << piece;
                first = false;
            } else {
                out << (c < 0 ? "-" : "+") << piece;
            }
        }
    if (first) out << "0";
    return out.str();
}

GroupRingElement group_ring_lhs(unsigned p) {
    GroupRingElement acc(p);
    for (unsigned s = 1; s + 1 < p; ++s)
        for (unsigned j = 0; j < p; ++j) acc.at(-(long)(s * j), (long)j) += 1;
    return acc - GroupRingElement::unit(p).scaled((long long)p);
}

GroupRingElement group_ring_rhs(unsigned p) {
    GroupRingElement sumA(p), sumB(p), sumAB(p);
    for (unsigned j = 0; j < p; ++j) {
        sumA.at((long)j, 0) += 1;
        sumB.at(0, (long)j) += 1;
        sumAB.at((long)j, (long)j) += 1;
    }
    return sumA * sumB - sumA - sumB - sumAB;
}

bool group_ring_identity_check(unsigned p) {
    if (p < 3 || !is_prime_u32(p)) throw error("group ring identity needs an odd prime");
    return group_ring_lhs(p) == group_ring_rhs(p);
}

}  // namespace sdr
