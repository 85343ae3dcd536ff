#include <random>

#include "doctest.h"
#include "sdr/errors.hpp"
#include "sdr/field.hpp"

using namespace sdr;

namespace {

// ---- test-local integer polynomial arithmetic (independent oracle) ----

using ZPoly = std::vector<long long>;

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    ZPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// exact division of integer polynomials with monic divisor
ZPoly zdiv_exact(ZPoly f, const ZPoly& g) {
    REQUIRE(g.back() == 1);
    ZPoly q(f.size() - g.size() + 1, 0);
    for (std::size_t qi = q.size(); qi-- > 0;) {
        long long c = f[qi + g.size() - 1];
        q[qi] = c;
        for (std::size_t j = 0; j < g.size(); ++j) f[qi + j] -= c * g[j];
    }
    for (long long c : f) REQUIRE(c == 0);
    return q;
}

// Moebius-formula oracle: Phi_m = prod_{d | m} (t^{m/d} - 1)^{mu(d)}
ZPoly phi_oracle(unsigned m) {
    auto mu = [](unsigned n) {
        int result = 1;
        for (unsigned p = 2; p * p <= n; ++p) {
            if (n % p == 0) {
                n /= p;
                if (n % p == 0) return 0;
                result = -result;
            }
        }
        if (n > 1) result = -result;
        return result;
    };
    ZPoly num = {1};
    std::vector<ZPoly> dens;
    for (unsigned d = 1; d <= m; ++d) {
        if (m % d) continue;
        int u = mu(d);
        if (u == 0) continue;
        ZPoly f(m / d + 1, 0);
        f[0] = -1;
        f[m / d] = 1;
        if (u == 1)
            num = zmul(num, f);
        else
            dens.push_back(f);
    }
    for (const auto& d : dens) num = zdiv_exact(num, d);
    return num;
}

std::vector<long long> lib_phi_as_ints(unsigned m) {
    std::vector<long long> out;
    for (const auto& c : cyclotomic_polynomial(m)) {
        REQUIRE(c.is_integer());
        out.push_back((long long)c.numerator().get_si());
    }
    return out;
}

FieldElement rand_element(const FieldContext& ctx, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 20);
    switch (ctx.kind) {
        case FieldContext::Kind::rational:
            return FieldElement::from_rational(ctx, Rational(num(rng), den(rng)));
        case FieldContext::Kind::cyclotomic: {
            FieldElement acc = FieldElement::zero(ctx);
            FieldElement z = FieldElement::zeta(ctx.conductor);
            unsigned phi = euler_phi(ctx.conductor);
            for (unsigned j = 0; j < phi; ++j)
                acc += z.pow(j) * FieldElement::from_rational(ctx, Rational(num(rng), den(rng)));
            return acc;
        }
        case FieldContext::Kind::finite: {
            std::uniform_int_distribution<std::uint64_t> idx(0, ctx.q() - 1);
            return FieldElement::from_index(ctx, idx(rng));
        }
    }
    return FieldElement::zero(ctx);
}

}  // namespace

TEST_CASE("rational arithmetic and canonical form") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-6, 4).str() == "-3/2");
    CHECK(Rational(0).str() == "0");
    CHECK(Rational(7).denominator() == 1);
    CHECK(Rational(3, 5).inverse() == Rational(5, 3));
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), division_by_zero);
    CHECK(Rational::from_string("-14/21") == Rational(-2, 3));
}

TEST_CASE("cyclotomic polynomials match the Moebius-formula oracle") {
    CHECK(lib_phi_as_ints(7) == ZPoly{1, 1, 1, 1, 1, 1, 1});
    // (t^6 - 1)/((t^3 - 1)(t + 1)) by exact division
    ZPoly t6(7, 0);
    t6[0] = -1;
    t6[6] = 1;
    ZPoly t3 = {-1, 0, 0, 1};
    ZPoly expect6 = zdiv_exact(zdiv_exact(t6, t3), {1, 1});
    CHECK(lib_phi_as_ints(6) == expect6);
    CHECK(expect6 == ZPoly{1, -1, 1});

    for (unsigned m : {1u, 2u, 3u, 4u, 6u, 12u, 14u, 42u, 45u})
        CHECK(lib_phi_as_ints(m) == phi_oracle(m));
    CHECK(lib_phi_as_ints(42).size() == 13);  // degree phi(42) = 12
}

TEST_CASE("field arithmetic examples") {
    auto c6 = FieldContext::cyclo(6);
    auto z = FieldElement::zeta(6);
    CHECK(z + z.inverse() == FieldElement::one(c6));  // zeta^{-1} = 1 - zeta mod Phi_6

    auto f7 = FieldContext::finite(7);
    CHECK(FieldElement::integer(f7, 3) * FieldElement::integer(f7, 5) == FieldElement::one(f7));

    CHECK_THROWS_AS(FieldElement::one(f7) / FieldElement::zero(f7), division_by_zero);
    CHECK_THROWS_AS(FieldElement::one(f7) + FieldElement::one(FieldContext::Q()),
                    context_mismatch);
}

TEST_CASE("Phi_m vanishes at zeta_m") {
    for (unsigned m : {3u, 6u, 7u, 14u, 42u}) {
        auto ctx = FieldContext::cyclo(m);
        auto z = FieldElement::zeta(m);
        auto phi = cyclotomic_polynomial(m);
        FieldElement acc = FieldElement::zero(ctx);
        for (std::size_t i = 0; i < phi.size(); ++i)
            acc += FieldElement::from_rational(ctx, phi[i]) * z.pow((long)i);
        CHECK(acc.is_zero());
    }
}

TEST_CASE("embeddings follow the exponent map") {
    auto c42 = FieldContext::cyclo(42);
    CHECK(FieldElement::zeta(6).embed(c42) == FieldElement::zeta(42).pow(7));
    CHECK(FieldElement::zeta(14).embed(c42) == FieldElement::zeta(42).pow(3));
    CHECK(FieldElement::one(FieldContext::Q()).embed(c42) == FieldElement::one(c42));
    CHECK_THROWS_AS(FieldElement::zeta(4).embed(c42), context_mismatch);
}

TEST_CASE("galois orbits") {
    auto z3 = FieldElement::zeta(3);
    auto orbit3 = z3.galois_orbit();
    REQUIRE(orbit3.size() == 2);
    CHECK(orbit3[0] == z3);
    CHECK(orbit3[1] == z3 * z3);

    auto five = FieldElement::integer(FieldContext::cyclo(12), 5);
    CHECK(five.galois_orbit().size() == 1);

    auto eta = FieldElement::zeta(6);
    auto orbit6 = eta.galois_orbit();
    REQUIRE(orbit6.size() == 2);
    CHECK(orbit6[1] == eta.inverse());  // conjugate of a primitive 6th root
}

TEST_CASE("orbit members satisfy one rational minimal polynomial") {
    // product of (t - y) over the orbit has rational coefficients and every
    // orbit member is a root
    for (unsigned m : {6u, 7u, 12u}) {
        auto ctx = FieldContext::cyclo(m);
        std::mt19937_64 rng(1234 + m);
        for (int trial = 0; trial < 5; ++trial) {
            FieldElement x = rand_element(ctx, rng);
            auto orbit = x.galois_orbit();
            for (std::size_t i = 0; i < orbit.size(); ++i)
                for (std::size_t j = i + 1; j < orbit.size(); ++j)
                    CHECK(orbit[i] != orbit[j]);
            std::vector<FieldElement> poly{FieldElement::one(ctx)};
            for (const auto& y : orbit) {
                std::vector<FieldElement> next(poly.size() + 1, FieldElement::zero(ctx));
                for (std::size_t i = 0; i < poly.size(); ++i) {
                    next[i + 1] += poly[i];
                    next[i] -= poly[i] * y;
                }
                poly = std::move(next);
            }
            for (const auto& c : poly) CHECK(c.is_rational_valued());
            for (const auto& y : orbit) {
                FieldElement acc = FieldElement::zero(ctx);
                for (std::size_t i = poly.size(); i-- > 0;) acc = acc * y + poly[i];
                CHECK(acc.is_zero());
            }
        }
    }
}

TEST_CASE("field axioms hold on random triples") {
    std::vector<FieldContext> ctxs{FieldContext::Q(), FieldContext::cyclo(6),
                                   FieldContext::finite(7), FieldContext::finite(3, 2)};
    std::mt19937_64 rng(20240917);
    for (const auto& ctx : ctxs) {
        for (int trial = 0; trial < 250; ++trial) {
            FieldElement a = rand_element(ctx, rng);
            FieldElement b = rand_element(ctx, rng);
            FieldElement c = rand_element(ctx, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK(a * a.inverse() == FieldElement::one(ctx));
            CHECK(a - a == FieldElement::zero(ctx));
        }
    }
}

TEST_CASE("embedding is injective and a homomorphism on random pairs") {
    auto c42 = FieldContext::cyclo(42);
    std::mt19937_64 rng(77);
    for (unsigned m : {6u, 14u}) {
        auto ctx = FieldContext::cyclo(m);
        for (int trial = 0; trial < 500; ++trial) {
            FieldElement a = rand_element(ctx, rng);
            FieldElement b = rand_element(ctx, rng);
            CHECK((a + b).embed(c42) == a.embed(c42) + b.embed(c42));
            CHECK((a * b).embed(c42) == a.embed(c42) * b.embed(c42));
            if (a != b) CHECK(a.embed(c42) != b.embed(c42));
        }
    }
}

TEST_CASE("finite extension fields use the least irreducible modulus") {
    const auto& f4 = finite_field(2, 2);
    CHECK(f4.modulus == std::vector<std::uint32_t>{1, 1});  // t^2 + t + 1
    const auto& f9 = finite_field(3, 2);
    CHECK(f9.modulus == std::vector<std::uint32_t>{1, 0});  // t^2 + 1
    const auto& f8 = finite_field(2, 3);
    CHECK(f8.modulus == std::vector<std::uint32_t>{1, 1, 0});  // t^3 + t + 1
    CHECK_THROWS_AS(finite_field(6, 1), error);
}

TEST_CASE("element text forms") {
    CHECK(FieldElement::from_rational(FieldContext::Q(), Rational(-7, 3)).str() == "-7/3");
    auto z = FieldElement::zeta(42);
    CHECK((z.pow(3) * FieldElement::integer(z.context(), 2)).str() == "2*z42^3");
    CHECK(FieldElement::integer(FieldContext::finite(7), 12).str() == "5");
    CHECK(FieldContext::parse("F9").q() == 9);
    CHECK(FieldContext::parse("Q(z42)").conductor == 42);
    CHECK(FieldContext::parse("Q").is_rational());
}
