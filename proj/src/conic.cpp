#include "sdr/conic.hpp"

#include <algorithm>
#include <set>

#include "sdr/errors.hpp"

namespace sdr {

namespace {

// v_p(x) and the unit part for a nonzero rational.
long val_p(const Rational& x, const mpz_class& p, mpq_class& unit) {
    mpz_class num = x.numerator(), den = x.denominator();
    long v = 0;
    while (mpz_divisible_p(num.get_mpz_t(), p.get_mpz_t())) {
        num /= p;
        ++v;
    }
    while (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t())) {
        den /= p;
        --v;
    }
    unit = mpq_class(num, den);
    unit.canonicalize();
    return v;
}

// Legendre symbol of a p-unit rational, odd p.
int legendre_unit(const mpq_class& u, const mpz_class& p) {
    int s = mpz_legendre(mpz_class(u.get_num()).get_mpz_t(), p.get_mpz_t());
    s *= mpz_legendre(mpz_class(u.get_den()).get_mpz_t(), p.get_mpz_t());
    return s;
}

// residue of an odd rational mod 8
long mod8(const mpq_class& u) {
    mpz_class num = u.get_num() % 8, den = u.get_den() % 8;
    if (num < 0) num += 8;
    if (den < 0) den += 8;
    long n = num.get_si(), d = den.get_si();
    // d odd, so d^2 == 1 (mod 8) and d is its own inverse
    return (n * d) % 8;
}

}  // namespace

int hilbert_symbol(const Rational& x, const Rational& y, const mpz_class& v) {
    if (x.is_zero() || y.is_zero()) throw error("Hilbert symbol needs nonzero arguments");
    if (v == 0) return (x.sign() < 0 && y.sign() < 0) ? -1 : 1;
    mpq_class u1, u2;
    long a = val_p(x, v, u1);
    long b = val_p(y, v, u2);
    if (v % 2 == 1) {
        int s = 1;
        if ((a % 2) && (b % 2)) {
            // (-1)^{(p-1)/2}
            mpz_class r = (v - 1) / 2;
            if (mpz_odd_p(r.get_mpz_t())) s = -s;
        }
        if (b % 2) s *= legendre_unit(u1, v);
        if (a % 2) s *= legendre_unit(u2, v);
        return s;
    }
    // p = 2: (-1)^{eps(u1) eps(u2) + a w(u2) + b w(u1)}
    long r1 = mod8(u1), r2 = mod8(u2);
    long eps1 = ((r1 - 1) / 2) % 2, eps2 = ((r2 - 1) / 2) % 2;
    long w1 = (r1 == 1 || r1 == 7) ? 0 : 1;
    long w2 = (r2 == 1 || r2 == 7) ? 0 : 1;
    long e = eps1 * eps2 + (a % 2) * w2 + (b % 2) * w1;
    return (e % 2) ? -1 : 1;
}

TernaryPoly diagonal_conic(const Rational& a, const Rational& b, const Rational& c) {
    FieldContext ctx = FieldContext::Q();
    TernaryPoly f(ctx);
    const Rational* coeffs[3] = {&a, &b, &c};
    for (int i = 0; i < 3; ++i) {
        Monomial m;
        m.e[i] = 2;
        f.add_term(m, FieldElement::from_rational(ctx, *coeffs[i]));
    }
    return f;
}

namespace {

mpz_class squarefree_part(mpz_class n, mpz_class& square_root_part) {
    // n = square_root_part^2 * result, result squarefree (sign preserved)
    square_root_part = 1;
    int sign = sgn(n) < 0 ? -1 : 1;
    n = abs(n);
    for (mpz_class f = 2; f * f <= n; ++f) {
        mpz_class f2 = f * f;
        while (mpz_divisible_p(n.get_mpz_t(), f2.get_mpz_t())) {
            n /= f2;
            square_root_part *= f;
        }
    }
    return sign * n;
}

struct ReducedConic {
    std::array<mpz_class, 3> coef;       // squarefree, pairwise coprime
    std::array<mpq_class, 3> back;       // witness_original_i = back[i] * witness_reduced_i
};

ReducedConic reduce_conic(const Rational& a, const Rational& b, const Rational& c) {
    ReducedConic r;
    // clear denominators (no variable change)
    mpz_class L = 1;
    for (const Rational* x : {&a, &b, &c}) L = lcm(L, x->denominator());
    r.coef = {mpz_class(a.raw() * L), mpz_class(b.raw() * L), mpz_class(c.raw() * L)};
    mpz_class g = gcd(gcd(r.coef[0], r.coef[1]), r.coef[2]);
    for (auto& x : r.coef) x /= g;
    for (auto& bk : r.back) bk = 1;

    bool changed = true;
    while (changed) {
        changed = false;
        // strip square parts: a0 s^2 X^2 -> a0 (sX)^2, so X = U / s
        for (int i = 0; i < 3; ++i) {
            mpz_class s;
            mpz_class sf = squarefree_part(r.coef[i], s);
            if (s != 1) {
                r.coef[i] = sf;
                r.back[i] /= s;
                changed = true;
            }
        }
        // peel common factors of pairs: <a,b,c> ~ <a/g, b/g, c g> with
        // X = U/g, Y = V/g for g = gcd(a, b)
        for (int i = 0; i < 3 && !changed; ++i) {
            int j = (i + 1) % 3, k = (i + 2) % 3;
            mpz_class gij = gcd(r.coef[i], r.coef[j]);
            if (gij > 1) {
                r.coef[i] /= gij;
                r.coef[j] /= gij;
                r.coef[k] *= gij;
                r.back[i] /= gij;
                r.back[j] /= gij;
                changed = true;
            }
        }
    }
    return r;
}

mpz_class isqrt_floor(const mpz_class& n) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

}  // namespace

ConicDecision conic_has_rational_point(const Rational& a, const Rational& b, const Rational& c) {
    if (a.is_zero() || b.is_zero() || c.is_zero())
        throw degenerate_input("degenerate conic: a coefficient vanishes");
    ConicDecision out;
    out.a = a;
    out.b = b;
    out.c = c;

    Rational x = -(a * c), y = -(b * c);
    // places: real, 2, and the primes of the reduced integer coefficients
    std::set<mpz_class> primes{2};
    ReducedConic red = reduce_conic(a, b, c);
    for (const auto& coefficient : red.coef) {
        mpz_class n = abs(coefficient);
        for (mpz_class f = 2; f * f <= n; ++f)
            while (mpz_divisible_p(n.get_mpz_t(), f.get_mpz_t())) {
                primes.insert(f);
                n /= f;
            }
        if (n > 1) primes.insert(n);
    }
    if (hilbert_symbol(x, y, 0) == -1) out.obstructions.push_back("real place");
    for (const auto& p : primes)
        if (hilbert_symbol(x, y, p) == -1) out.obstructions.push_back("p = " + p.get_str());
    out.solvable = out.obstructions.empty();
    if (!out.solvable) return out;

    // Legendre bounds on the reduced form guarantee a hit
    mpz_class A = abs(red.coef[0]), B = abs(red.coef[1]), C = abs(red.coef[2]);
    mpz_class bx = isqrt_floor(B * C) + 1, by = isqrt_floor(A * C) + 1, bz = isqrt_floor(A * B) + 1;
    std::optional<std::array<mpz_class, 3>> best;
    mpz_class best_height = 0;
    for (mpz_class xx = 0; xx <= bx; ++xx)
        for (mpz_class yy = 0; yy <= by; ++yy)
            for (mpz_class zz = 0; zz <= bz; ++zz) {
                if (xx == 0 && yy == 0 && zz == 0) continue;
                if (gcd(gcd(xx, yy), zz) != 1) continue;
                mpz_class v = red.coef[0] * xx * xx + red.coef[1] * yy * yy +
                              red.coef[2] * zz * zz;
                if (v != 0) continue;
                mpz_class h = xx + yy + zz;
                // least height; ties toward larger earlier coordinates
                if (!best || h < best_height ||
                    (h == best_height &&
                     (xx > (*best)[0] || (xx == (*best)[0] && yy > (*best)[1])))) {
                    best = {xx, yy, zz};
                    best_height = h;
                }
            }
    if (!best) throw error("local-global decision said solvable but the bounded search failed");

    // map back through the variable scalings and clear denominators
    std::array<mpq_class, 3> w{red.back[0] * (*best)[0], red.back[1] * (*best)[1],
                               red.back[2] * (*best)[2]};
    mpz_class den = 1;
    for (auto& q : w) {
        q.canonicalize();
        den = lcm(den, mpz_class(q.get_den()));
    }
    std::array<mpz_class, 3> wz;
    for (int i = 0; i < 3; ++i) {
        mpq_class scaled = w[i] * den;
        scaled.canonicalize();
        if (scaled.get_den() != 1) throw error("witness denominator clearing failed");
        wz[i] = scaled.get_num();
    }
    mpz_class g = gcd(gcd(wz[0], wz[1]), wz[2]);
    for (auto& z : wz) z /= g;

    // exactness of the witness on the original equation
    mpq_class check = a.raw() * wz[0] * wz[0] + b.raw() * wz[1] * wz[1] + c.raw() * wz[2] * wz[2];
    if (check != 0) throw error("conic witness verification failed");
    out.witness = wz;
    return out;
}

std::optional<SymmetricPencil> conic_representation(const Rational& a, const Rational& b,
                                                    const Rational& c) {
    ConicDecision dec = conic_has_rational_point(a, b, c);
    if (!dec.solvable) return std::nullopt;
    FieldContext ctx = FieldContext::Q();
    auto fe = [&](const Rational& r) { return FieldElement::from_rational(ctx, r); };

    // quadratic form S = diag(a, b, c); B(x, y) = x^T S y
    std::array<Rational, 3> diag{a, b, c};
    auto Bform = [&](const std::array<Rational, 3>& x, const std::array<Rational, 3>& y) {
        Rational acc(0);
        for (int i = 0; i < 3; ++i) acc += diag[i] * x[i] * y[i];
        return acc;
    };

    std::array<Rational, 3> w{Rational((*dec.witness)[0]), Rational((*dec.witness)[1]),
                              Rational((*dec.witness)[2])};
    // u: first coordinate vector with B(w, u) != 0
    int ui = -1;
    for (int i = 0; i < 3; ++i) {
        std::array<Rational, 3> e{Rational(0), Rational(0), Rational(0)};
        e[i] = Rational(1);
        if (!Bform(w, e).is_zero()) {
            ui = i;
            break;
        }
    }
    if (ui < 0) throw error("degenerate polar form");  // impossible for abc != 0
    std::array<Rational, 3> u{Rational(0), Rational(0), Rational(0)};
    u[ui] = Rational(1);

    Rational qu = Bform(u, u);
    Rational bwu = Bform(w, u);
    std::array<Rational, 3> f;
    for (int i = 0; i < 3; ++i) f[i] = u[i] - qu / (Rational(2) * bwu) * w[i];

    // g: orthogonal complement of span(w, f) via the cross product of Sw, Sf
    std::array<Rational, 3> Sw, Sf;
    for (int i = 0; i < 3; ++i) {
        Sw[i] = diag[i] * w[i];
        Sf[i] = diag[i] * f[i];
    }
    std::array<Rational, 3> g{Sw[1] * Sf[2] - Sw[2] * Sf[1], Sw[2] * Sf[0] - Sw[0] * Sf[2],
                              Sw[0] * Sf[1] - Sw[1] * Sf[0]};
    Rational delta = Bform(g, g);
    if (delta.is_zero()) throw error("unexpected isotropic complement");

    // rescale f so that B(w, f) = 2 delta, making Q = delta * (4 uv + t^2)
    Rational scale = Rational(2) * delta / Bform(w, f);
    for (auto& x : f) x *= scale;

    // bases: ours (w, f, g); model (1,0,1), (1,0,-1), (0,1,0)
    Mat ours(ctx, 3, 3), model(ctx, 3, 3);
    std::array<std::array<Rational, 3>, 3> cols{w, f, g};
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) ours.at(i, j) = fe(cols[j][i]);
    model.at(0, 0) = fe(Rational(1));
    model.at(2, 0) = fe(Rational(1));
    model.at(0, 1) = fe(Rational(1));
    model.at(2, 1) = fe(Rational(-1));
    model.at(1, 2) = fe(Rational(1));
    Mat U = model * ours.inverse();

    // pull the model pencil back: N_j = sum_i U[i][j] M_i, a = -delta
    SymmetricPencil base = SymmetricPencil::conic_unit();
    std::array<Mat, 3> N{Mat(ctx, 2, 2), Mat(ctx, 2, 2), Mat(ctx, 2, 2)};
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) {
            if (U.at(i, j).is_zero()) continue;
            for (std::size_t r = 0; r < 2; ++r)
                for (std::size_t s = 0; s < 2; ++s)
                    N[j].at(r, s) += U.at(i, j) * base.M[i].at(r, s);
        }
    SymmetricPencil pen(std::move(N), fe(-delta));
    if (!verify_representation(diagonal_conic(a, b, c), pen))
        throw error("transported conic pencil failed verification");
    return pen;
}

}  // namespace sdr
