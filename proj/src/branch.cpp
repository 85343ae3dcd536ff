#include "sdr/branch.hpp"

#include <sstream>

#include "sdr/errors.hpp"

namespace sdr {

namespace {

// ---- truncated power series over a field context ----

struct Series {
    FieldContext ctx;
    std::vector<FieldElement> c;  // length = truncation order

    static Series constant(const FieldContext& ctx, const FieldElement& x, std::size_t len) {
        Series s{ctx, std::vector<FieldElement>(len, FieldElement::zero(ctx))};
        s.c[0] = x;
        return s;
    }
};

Series add(const Series& a, const Series& b) {
    Series r = a;
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
    return r;
}

Series sub(const Series& a, const Series& b) {
    Series r = a;
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
    return r;
}

Series mul(const Series& a, const Series& b) {
    std::size_t len = a.c.size();
    Series r{a.ctx, std::vector<FieldElement>(len, FieldElement::zero(a.ctx))};
    for (std::size_t i = 0; i < len; ++i) {
        if (a.c[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < len; ++j) {
            if (b.c[j].is_zero()) continue;
            r.c[i + j] += a.c[i] * b.c[j];
        }
    }
    return r;
}

// 1/u for a unit u (u(0) != 0), by the linear recurrence.
Series inverse(const Series& u) {
    std::size_t len = u.c.size();
    Series r{u.ctx, std::vector<FieldElement>(len, FieldElement::zero(u.ctx))};
    FieldElement u0inv = u.c[0].inverse();
    r.c[0] = u0inv;
    for (std::size_t n = 1; n < len; ++n) {
        FieldElement acc = FieldElement::zero(u.ctx);
        for (std::size_t k = 1; k <= n; ++k) acc += u.c[k] * r.c[n - k];
        r.c[n] = -(acc * u0inv);
    }
    return r;
}

bool is_zero(const Series& s) {
    for (const auto& x : s.c)
        if (!x.is_zero()) return false;
    return true;
}

// Dehomogenized bivariate polynomial: coeff[i][j] multiplies x^i y^j where
// (x, y) are the chart variables in index order.
struct Chart {
    int chart;                  // variable set to 1
    int low, high;              // remaining variable indices, low < high
    std::vector<std::vector<FieldElement>> coeff;
};

Chart dehomogenize(const TernaryPoly& F, int chart) {
    Chart ch;
    ch.chart = chart;
    int idx = 0;
    int vars[2];
    for (int i = 0; i < 3; ++i)
        if (i != chart) vars[idx++] = i;
    ch.low = vars[0];
    ch.high = vars[1];
    std::uint32_t d = F.degree();
    ch.coeff.assign(d + 1, std::vector<FieldElement>(d + 1, FieldElement::zero(F.context())));
    for (const auto& [m, c] : F.terms()) ch.coeff[m.e[ch.low]][m.e[ch.high]] += c;
    return ch;
}

// g(X(t), Y(t)) with both arguments series; Horner in y, then x.
Series eval_chart(const Chart& g, const Series& X, const Series& Y) {
    std::size_t len = X.c.size();
    const FieldContext& ctx = X.ctx;
    Series total = Series::constant(ctx, FieldElement::zero(ctx), len);
    // g = sum_i x^i * (sum_j coeff[i][j] y^j); precompute inner rows by Horner in Y
    for (std::size_t i = g.coeff.size(); i-- > 0;) {
        Series row = Series::constant(ctx, FieldElement::zero(ctx), len);
        for (std::size_t j = g.coeff[i].size(); j-- > 0;) {
            row = mul(row, Y);
            row.c[0] += g.coeff[i][j];
        }
        total = add(mul(total, X), row);
    }
    return total;
}

struct BranchBasis {
    Series X;  // series for the low variable
    Series Y;  // series for the high variable
};

BranchBasis branch_series(const BranchExpansion& b, std::size_t len) {
    const FieldContext& ctx = b.series[0].context();
    Series solved{ctx, std::vector<FieldElement>(len, FieldElement::zero(ctx))};
    for (std::size_t i = 0; i < len && i < b.series.size(); ++i) solved.c[i] = b.series[i];
    // parameter variable = value + t
    FieldElement pv = b.base.coords()[b.param];
    Series par = Series::constant(ctx, pv, len);
    if (len > 1) par.c[1] = FieldElement::one(ctx);
    int low = std::min(b.solved, b.param);
    if (b.solved == low) return {solved, par};
    return {par, solved};
}

}  // namespace

BranchExpansion branch_expand(const PlaneCurve& C, const ProjectivePoint& P, unsigned N) {
    auto uctx = unify(C.context(), P.context());
    if (!uctx) throw context_mismatch("point context incompatible with curve");
    const FieldContext ctx = *uctx;
    ProjectivePoint Pe = P.embedded(ctx);
    TernaryPoly F = C.poly().embedded(ctx);
    if (!F.evaluate(Pe.coords()).is_zero()) throw error("expansion point is not on the curve");

    // chart: the coordinate normalized to 1
    int chart = -1;
    for (int i = 2; i >= 0; --i)
        if (Pe.coords()[i].is_one()) {
            chart = i;
            break;
        }
    if (chart < 0) throw degenerate_input("unnormalized point");
    Chart g = dehomogenize(F, chart);

    FieldElement d_low = F.derivative(g.low).evaluate(Pe.coords());
    FieldElement d_high = F.derivative(g.high).evaluate(Pe.coords());
    int solved, param;
    if (!d_high.is_zero()) {
        solved = g.high;
        param = g.low;
    } else if (!d_low.is_zero()) {
        solved = g.low;
        param = g.high;
    } else {
        throw degenerate_input("curve is singular at " + Pe.str());
    }

    const std::size_t len = N + 1;
    FieldElement a = Pe.coords()[param];
    FieldElement b = Pe.coords()[solved];

    // Newton: y <- y - g(x, y)/g_y(x, y) in the truncated ring; the first
    // derivative is a unit at the point, so each step doubles the valuation
    // of the residual.
    Chart gd = dehomogenize(F.derivative(solved), chart);
    Series par = Series::constant(ctx, a, len);
    if (len > 1) par.c[1] = FieldElement::one(ctx);
    Series y = Series::constant(ctx, b, len);

    auto residual = [&](const Series& yy) {
        if (solved == g.high) return eval_chart(g, par, yy);
        return eval_chart(g, yy, par);
    };
    auto residual_d = [&](const Series& yy) {
        if (solved == g.high) return eval_chart(gd, par, yy);
        return eval_chart(gd, yy, par);
    };

    unsigned max_iter = 2;
    while ((1u << max_iter) < len) ++max_iter;
    max_iter += 2;
    Series r = residual(y);
    for (unsigned it = 0; it < max_iter && !is_zero(r); ++it) {
        y = sub(y, mul(r, inverse(residual_d(y))));
        r = residual(y);
    }
    if (!is_zero(r)) throw error("branch expansion did not converge (residual nonzero)");

    BranchExpansion out{Pe, chart, solved, param, std::move(y.c), N};

    // residual invariant, re-checked from scratch on every call
    auto basis = branch_series(out, len);
    if (!is_zero(eval_chart(g, basis.X, basis.Y)))
        throw error("branch expansion residual check failed");
    return out;
}

unsigned local_intersection_multiplicity(const PlaneCurve& C, const TernaryPoly& G,
                                         const ProjectivePoint& P) {
    auto uctx = unify(C.context(), P.context());
    if (uctx) uctx = unify(*uctx, G.context());
    if (!uctx) throw context_mismatch("incompatible contexts in multiplicity computation");
    const FieldContext ctx = *uctx;
    TernaryPoly Ge = G.embedded(ctx);
    PlaneCurve Ce(C.poly().embedded(ctx));
    ProjectivePoint Pe = P.embedded(ctx);

    auto gdeg = Ge.homogeneous_degree();
    if (!gdeg || *gdeg == 0) throw error("section form must be homogeneous of positive degree");
    const unsigned bound = *gdeg * Ce.degree();

    unsigned N = 2 * *gdeg;
    if (N < 2) N = 2;
    while (true) {
        if (N > bound) N = bound;
        BranchExpansion b = branch_expand(Ce, Pe, N);
        auto basis = branch_series(b, N + 1);
        Chart gg = dehomogenize(Ge, b.chart);
        Series comp = eval_chart(gg, basis.X, basis.Y);
        for (unsigned i = 0; i <= N; ++i)
            if (!comp.c[i].is_zero()) return i;
        if (N >= bound)
            throw common_component(
                "section form vanishes beyond the Bezout bound at " + Pe.str() +
                "; it shares the curve component through the point");
        N *= 2;
    }
}

SectionDivisor section_divisor(const PlaneCurve& C, const TernaryPoly& G,
                               const std::vector<ProjectivePoint>& candidates) {
    auto gdeg = G.homogeneous_degree();
    if (!gdeg || *gdeg == 0) throw error("section form must be homogeneous of positive degree");
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (!C.contains(candidates[i]))
            throw error("section candidate " + candidates[i].str() + " is not on the curve");
        for (std::size_t j = i + 1; j < candidates.size(); ++j)
            if (candidates[i].context() == candidates[j].context() &&
                candidates[i] == candidates[j])
                throw error("section candidates must be pairwise distinct");
    }

    std::vector<long> mult(candidates.size(), 0);
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < (long)candidates.size(); ++i) {
        try {
            mult[i] = (long)local_intersection_multiplicity(C, G, candidates[i]);
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);

    auto curve = std::make_shared<const PlaneCurve>(C);
    std::vector<Divisor::Entry> entries;
    long total = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        total += mult[i];
        if (mult[i] > 0) entries.push_back({candidates[i], mult[i]});
    }
    long bezout = (long)*gdeg * (long)C.degree();
    return SectionDivisor{Divisor(curve, std::move(entries)), total == bezout, total, bezout};
}

FunctionDivisorCheck divisor_of_function_verify(const PlaneCurve& C, const TernaryPoly& G,
                                                const TernaryPoly& H, const Divisor& claimed,
                                                const std::vector<ProjectivePoint>& candidatesG,
                                                const std::vector<ProjectivePoint>& candidatesH) {
    auto dg = G.homogeneous_degree(), dh = H.homogeneous_degree();
    if (!dg || !dh || *dg != *dh)
        throw error("function numerator and denominator must share one degree");
    for (const TernaryPoly* f : {&G, &H}) {
        auto uctx = unify(C.context(), f->context());
        if (uctx && f->embedded(*uctx).exact_divide(C.poly().embedded(*uctx)))
            throw common_component("function has the curve as a component");
    }
    FunctionDivisorCheck out{false, section_divisor(C, G, candidatesG),
                             section_divisor(C, H, candidatesH), ""};
    std::ostringstream why;
    if (!out.numerator.complete) {
        why << "numerator section incomplete: found " << out.numerator.total << " of "
            << out.numerator.bezout;
        out.failure = why.str();
        return out;
    }
    if (!out.denominator.complete) {
        why << "denominator section incomplete: found " << out.denominator.total << " of "
            << out.denominator.bezout;
        out.failure = why.str();
        return out;
    }
    Divisor diff = out.numerator.divisor - out.denominator.divisor;
    if (!diff.equals(claimed)) {
        out.failure = "divisor difference does not match the claimed divisor";
        return out;
    }
    out.ok = true;
    return out;
}

}  // namespace sdr
