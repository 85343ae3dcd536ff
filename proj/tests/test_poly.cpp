#include <map>
#include <random>

#include "doctest.h"
#include "sdr/errors.hpp"
#include "sdr/matrix.hpp"
#include "sdr/parse.hpp"
#include "sdr/resultant.hpp"
#include "sdr/ternary_poly.hpp"

using namespace sdr;

namespace {

const FieldContext Q = FieldContext::Q();

// test-local dense multiplication oracle over exponent triples
std::map<std::array<unsigned, 3>, long> dense_mul(const std::map<std::array<unsigned, 3>, long>& a,
                                                  const std::map<std::array<unsigned, 3>, long>& b) {
    std::map<std::array<unsigned, 3>, long> r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            std::array<unsigned, 3> m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]};
            r[m] += ca * cb;
        }
    std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
    return r;
}

std::map<std::array<unsigned, 3>, long> as_dense(const TernaryPoly& f) {
    std::map<std::array<unsigned, 3>, long> r;
    for (const auto& [m, c] : f.terms()) {
        REQUIRE(c.is_rational_valued());
        REQUIRE(c.rational_value().is_integer());
        r[{m.e[0], m.e[1], m.e[2]}] = (long)c.rational_value().numerator().get_si();
    }
    return r;
}

TernaryPoly random_poly(const FieldContext& ctx, std::mt19937_64& rng, unsigned max_deg = 5,
                        unsigned terms = 5, bool integer_coeffs = false) {
    std::uniform_int_distribution<unsigned> deg(0, max_deg);
    std::uniform_int_distribution<long> coef(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    TernaryPoly f(ctx);
    for (unsigned t = 0; t < terms; ++t) {
        Monomial m;
        unsigned d = deg(rng);
        for (int i = 0; i < 3 && d > 0; ++i) {
            std::uniform_int_distribution<unsigned> pick(0, d);
            m.e[i] = (i == 2) ? d : pick(rng);
            d -= m.e[i];
        }
        long c = coef(rng);
        if (c == 0) c = 1;
        // no fractional coefficients over finite fields: a random denominator
        // could be divisible by the characteristic
        Rational r = (integer_coeffs || ctx.is_finite()) ? Rational(c) : Rational(c, den(rng));
        if (ctx.is_cyclotomic()) {
            auto z = FieldElement::zeta(ctx.conductor);
            std::uniform_int_distribution<unsigned> e(0, euler_phi(ctx.conductor) - 1);
            f.add_term(m, z.pow(e(rng)) * FieldElement::from_rational(ctx, r));
        } else {
            f.add_term(m, FieldElement::from_rational(ctx, r));
        }
    }
    return f;
}

std::array<std::array<FieldElement, 3>, 3> random_invertible(const FieldContext& ctx,
                                                             std::mt19937_64& rng) {
    std::uniform_int_distribution<long> coef(-4, 4);
    while (true) {
        Mat m(ctx, 3, 3);
        std::array<std::array<FieldElement, 3>, 3> T;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                T[i][j] = FieldElement::integer(ctx, coef(rng));
                m.at(i, j) = T[i][j];
            }
        if (!m.det().is_zero()) return T;
    }
}

}  // namespace

TEST_CASE("parsing the named curves") {
    TernaryPoly fermat = parse_poly("X0^7+X1^7+X2^7", Q);
    CHECK(fermat.term_count() == 3);
    CHECK(fermat.homogeneous_degree() == 7u);

    TernaryPoly klein = parse_poly("X0^3*X1 + X1^3*X2 + X2^3*X0", Q);
    CHECK(klein.homogeneous_degree() == 4u);
    CHECK(klein.str() == "X0^3*X1+X0*X2^3+X1^3*X2");

    CHECK(parse_poly("0", Q).is_zero());
    CHECK(parse_poly("(X0+X1)^2-2*X0*X1", Q) == parse_poly("X0^2+X1^2", Q));

    CHECK_THROWS_AS(parse_poly("X0^", Q), parse_error);
    CHECK_THROWS_AS(parse_poly("X3+1", Q), parse_error);
    CHECK_THROWS_AS(parse_poly("z6*X0", Q), parse_error);  // generator outside Q
    CHECK_THROWS_AS(parse_poly("z4*X0", FieldContext::cyclo(6)), parse_error);
}

TEST_CASE("ring arithmetic with a dense oracle") {
    CHECK(parse_poly("(X0+X1)*(X0-X1)", Q) == parse_poly("X0^2-X1^2", Q));

    // frozen from the dense expansion oracle
    TernaryPoly sq = parse_poly("X0^2+X0*X1+X1^2", Q).pow(2);
    TernaryPoly expect = parse_poly("X0^4+2*X0^3*X1+3*X0^2*X1^2+2*X0*X1^3+X1^4", Q);
    CHECK(sq == expect);
    CHECK(dense_mul(as_dense(parse_poly("X0^2+X0*X1+X1^2", Q)),
                    as_dense(parse_poly("X0^2+X0*X1+X1^2", Q))) == as_dense(expect));

    TernaryPoly f = parse_poly("X0^2-3*X1*X2", Q);
    CHECK(f + TernaryPoly::zero(Q) == f);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        TernaryPoly a = random_poly(Q, rng, 4, 4, true);
        TernaryPoly b = random_poly(Q, rng, 4, 4, true);
        CHECK(as_dense(a * b) == dense_mul(as_dense(a), as_dense(b)));
    }
}

TEST_CASE("linear substitution") {
    TernaryPoly klein = parse_poly("X0^3*X1+X1^3*X2+X2^3*X0", Q);
    auto one = FieldElement::one(Q), zero = FieldElement::zero(Q);
    // sigma: X0 -> X1, X1 -> X2, X2 -> X0 fixes the quartic
    std::array<std::array<FieldElement, 3>, 3> sigma{{{zero, one, zero},
                                                      {zero, zero, one},
                                                      {one, zero, zero}}};
    CHECK(klein.substitute_linear(sigma) == klein);

    std::array<std::array<FieldElement, 3>, 3> ident{{{one, zero, zero},
                                                      {zero, one, zero},
                                                      {zero, zero, one}}};
    CHECK(klein.substitute_linear(ident) == klein);

    std::array<std::array<FieldElement, 3>, 3> swap01{{{zero, one, zero},
                                                       {one, zero, zero},
                                                       {zero, zero, one}}};
    CHECK(TernaryPoly::variable(Q, 0).substitute_linear(swap01) == TernaryPoly::variable(Q, 1));
}

TEST_CASE("substitution composes contravariantly") {
    std::mt19937_64 rng(42);
    for (const auto& ctx : {FieldContext::Q(), FieldContext::finite(5)}) {
        for (int trial = 0; trial < 20; ++trial) {
            TernaryPoly f = random_poly(ctx, rng, 3, 4, true);
            auto T1 = random_invertible(ctx, rng);
            auto T2 = random_invertible(ctx, rng);
            std::array<std::array<FieldElement, 3>, 3> T12;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    T12[i][j] = FieldElement::zero(ctx);
                    for (int k = 0; k < 3; ++k) T12[i][j] += T1[i][k] * T2[k][j];
                }
            CHECK(f.substitute_linear(T12) == f.substitute_linear(T1).substitute_linear(T2));
        }
    }
}

TEST_CASE("homogeneity and characteristic-aware derivatives") {
    CHECK(parse_poly("X0^2+X1*X2", Q).homogeneous_degree() == 2u);
    CHECK(!parse_poly("X0^2+X1", Q).homogeneous_degree());

    TernaryPoly f = parse_poly("X0^7", Q);
    CHECK(f.derivative(0) == parse_poly("7*X0^6", Q));

    auto F7 = FieldContext::finite(7);
    CHECK(parse_poly("X0^7", F7).derivative(0).is_zero());
}

TEST_CASE("exact division") {
    auto q = parse_poly("X0^2-X1^2", Q).exact_divide(parse_poly("X0-X1", Q));
    REQUIRE(q.has_value());
    CHECK(*q == parse_poly("X0+X1", Q));

    CHECK(!parse_poly("X0", Q).exact_divide(parse_poly("X1", Q)).has_value());
    CHECK_THROWS_AS(parse_poly("X0", Q).exact_divide(TernaryPoly::zero(Q)), division_by_zero);

    std::mt19937_64 rng(9);
    for (const auto& ctx : {FieldContext::Q(), FieldContext::cyclo(6), FieldContext::finite(5)}) {
        for (int trial = 0; trial < 30; ++trial) {
            TernaryPoly f = random_poly(ctx, rng, 3, 3);
            TernaryPoly g = random_poly(ctx, rng, 3, 3);
            if (g.is_zero()) continue;
            auto quot = (f * g).exact_divide(g);
            REQUIRE(quot.has_value());
            CHECK(*quot == f);
        }
    }
}

TEST_CASE("line restrictions") {
    auto one = FieldElement::one(Q);
    TernaryPoly klein = parse_poly("X0^3*X1+X1^3*X2+X2^3*X0", Q);
    BinaryForm r = restrict_to_line(klein, {one, one, one});
    // frozen from substituting (u, v, -u-v)
    CHECK(r.str() == "-u^4-2*u^3*v-3*u^2*v^2-2*u*v^3-v^4");

    TernaryPoly conic = parse_poly("X0^2+X1^2-X2^2", Q);
    CHECK(restrict_to_line(conic, {one, FieldElement::zero(Q), FieldElement::zero(Q)}).str() ==
          "u^2-v^2");

    TernaryPoly fermat = parse_poly("X0^7+X1^7+X2^7", Q);
    CHECK(restrict_to_line(fermat, {FieldElement::zero(Q), FieldElement::zero(Q), one}).str() ==
          "u^7+v^7");
}

TEST_CASE("restriction is multiplicative") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> coef(-5, 5);
    for (int trial = 0; trial < 25; ++trial) {
        TernaryPoly f(Q), g(Q);
        for (int reps = 0; reps < 4; ++reps) {
            Monomial mf, mg;
            unsigned df = 2, dg = 3;
            mf.e[0] = (unsigned)(rng() % (df + 1));
            mf.e[1] = df - mf.e[0];
            mg.e[1] = (unsigned)(rng() % (dg + 1));
            mg.e[2] = dg - mg.e[1];
            f.add_term(mf, FieldElement::integer(Q, coef(rng)));
            g.add_term(mg, FieldElement::integer(Q, coef(rng)));
        }
        if (f.is_zero() || g.is_zero()) continue;
        std::array<FieldElement, 3> L{FieldElement::integer(Q, coef(rng)),
                                      FieldElement::integer(Q, coef(rng)),
                                      FieldElement::integer(Q, coef(rng))};
        if (L[0].is_zero() && L[1].is_zero() && L[2].is_zero()) continue;
        CHECK(restrict_to_line(f * g, L) == restrict_to_line(f, L) * restrict_to_line(g, L));
    }
}

TEST_CASE("Macaulay resultant on the named forms") {
    TernaryPoly sphere = parse_poly("X0^2+X1^2+X2^2", Q);
    CHECK(!macaulay_resultant(sphere.derivative(0), sphere.derivative(1), sphere.derivative(2))
               .is_zero());

    TernaryPoly triangle = parse_poly("X0*X1*X2", Q);
    CHECK(macaulay_resultant(triangle.derivative(0), triangle.derivative(1),
                             triangle.derivative(2))
              .is_zero());

    TernaryPoly klein = parse_poly("X0^3*X1+X1^3*X2+X2^3*X0", Q);
    CHECK(!macaulay_resultant(klein.derivative(0), klein.derivative(1), klein.derivative(2))
               .is_zero());

    CHECK_THROWS_AS(macaulay_resultant(sphere, sphere, TernaryPoly::zero(Q)), error);
}

TEST_CASE("resultant vanishes on constructed common zeros") {
    // forms built to vanish at (1, 1, 1)
    std::mt19937_64 rng(800);
    for (int trial = 0; trial < 10; ++trial) {
        auto mk = [&](unsigned deg) {
            TernaryPoly lhs = parse_poly("X0-X1", Q) * random_poly(Q, rng, deg - 1, 3, true);
            TernaryPoly rhs = parse_poly("X1-X2", Q) * random_poly(Q, rng, deg - 1, 3, true);
            TernaryPoly sum = lhs + rhs;
            TernaryPoly out(Q);
            for (const auto& [m, c] : sum.terms())
                if (m.total() == deg) out.add_term(m, c);
            return out;
        };
        TernaryPoly f = mk(2), g = mk(2), h = mk(3);
        if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
        CHECK(macaulay_resultant(f, g, h).is_zero());
    }
}

TEST_CASE("resultant scales multihomogeneously") {
    TernaryPoly s = parse_poly("X0^2+X1^2+X2^2", Q);
    auto d0 = s.derivative(0), d1 = s.derivative(1), d2 = s.derivative(2);
    FieldElement base = macaulay_resultant(d0, d1, d2);
    FieldElement scaled = macaulay_resultant(d0 * FieldElement::integer(Q, 3), d1, d2);
    CHECK(scaled == base * FieldElement::integer(Q, 3));  // deg d1 * deg d2 = 1
}

TEST_CASE("parse-print round trip on random polynomials") {
    std::mt19937_64 rng(2718);
    std::vector<FieldContext> ctxs{FieldContext::Q(), FieldContext::cyclo(6),
                                   FieldContext::finite(7)};
    for (const auto& ctx : ctxs) {
        for (int trial = 0; trial < 170; ++trial) {
            TernaryPoly f = random_poly(ctx, rng, 6, 6);
            CHECK(parse_poly(f.str(), ctx) == f);
        }
    }
}
