#pragma once

#include <utility>
#include <vector>

#include "sdr/curve.hpp"

namespace sdr {

/// Truncated power-series solution of the curve equation at a smooth point.
/// In the affine chart X_chart = 1 the remaining variables are
/// (X_low, X_high) in index order; `solved` names which of the two is the
/// series and `param` the other (the local parameter t, centered at the
/// point). series[i] is the t^i coefficient of the solved variable.
struct BranchExpansion {
    ProjectivePoint base;
    int chart;
    int solved;
    int param;
    std::vector<FieldElement> series;
    unsigned precision;  // residual vanishes mod t^{precision+1}
};

/// Newton iteration in the chart picked by the point's normalization;
/// the residual invariant F(branch) = 0 mod t^{N+1} is checked on every
/// call. Throws degenerate_input at a singular point.
BranchExpansion branch_expand(const PlaneCurve& C, const ProjectivePoint& P, unsigned N);

/// Order of vanishing of G along the branch of C at P. Precision ramps up
/// to the Bezout bound deg(G) * deg(C); exceeding it means G shares the
/// component through P (common_component error).
unsigned local_intersection_multiplicity(const PlaneCurve& C, const TernaryPoly& G,
                                         const ProjectivePoint& P);

struct SectionDivisor {
    Divisor divisor;
    bool complete;       // sum of multiplicities == deg G * deg C
    long total;          // the sum actually found
    long bezout;         // deg G * deg C
};

/// Divisor cut out by G on C over the candidate points, with the Bezout
/// completeness certificate. Candidates must be pairwise distinct and lie
/// on C. Multiplicities are computed independently per candidate (OpenMP).
SectionDivisor section_divisor(const PlaneCurve& C, const TernaryPoly& G,
                               const std::vector<ProjectivePoint>& candidates);

struct FunctionDivisorCheck {
    bool ok;
    SectionDivisor numerator;
    SectionDivisor denominator;
    std::string failure;  // empty when ok
};

/// div(G/H) == claimed, certified through two complete section divisors.
FunctionDivisorCheck divisor_of_function_verify(const PlaneCurve& C, const TernaryPoly& G,
                                                const TernaryPoly& H, const Divisor& claimed,
                                                const std::vector<ProjectivePoint>& candidatesG,
                                                const std::vector<ProjectivePoint>& candidatesH);

}  // namespace sdr
