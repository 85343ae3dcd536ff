#pragma once

#include <iosfwd>
#include <memory>
#include <vector>

#include "sdr/point.hpp"
#include "sdr/ternary_poly.hpp"

namespace sdr {

/// Plane curve F = 0 for a nonzero homogeneous ternary form F.
class PlaneCurve {
public:
    explicit PlaneCurve(TernaryPoly F);

    const TernaryPoly& poly() const { return F_; }
    const FieldContext& context() const { return F_.context(); }
    std::uint32_t degree() const { return degree_; }
    std::uint32_t genus() const { return (degree_ - 1) * (degree_ - 2) / 2; }

    /// F(P) == 0 exactly, after unifying contexts.
    bool contains(const ProjectivePoint& P) const;

    /// Some partial derivative is nonzero at P (P must lie on the curve).
    bool smooth_at(const ProjectivePoint& P) const;

    /// Global smoothness by the resultant of the three partials. Throws
    /// smoothness_undecidable when the characteristic divides the degree.
    bool is_smooth() const;
    /// The certificate value behind is_smooth (nonzero iff smooth).
    FieldElement smoothness_certificate() const;

    static PlaneCurve parse(std::istream& in);
    static PlaneCurve parse_file(const std::string& path);
    std::string str() const;  // two-line curve file form

private:
    TernaryPoly F_;
    std::uint32_t degree_;
};

/// Finite formal Z-combination of points on one ambient curve. All points
/// are stored in a single unified context, entries sorted canonically,
/// zero multiplicities dropped.
class Divisor {
public:
    struct Entry {
        ProjectivePoint point;
        long mult;
    };

    explicit Divisor(std::shared_ptr<const PlaneCurve> curve) : curve_(std::move(curve)) {}
    Divisor(std::shared_ptr<const PlaneCurve> curve, std::vector<Entry> entries);

    const std::shared_ptr<const PlaneCurve>& curve() const { return curve_; }
    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t support_size() const { return entries_.size(); }

    long degree() const;
    bool is_effective() const;
    bool is_zero() const { return entries_.empty(); }

    Divisor operator+(const Divisor& o) const;
    Divisor operator-() const;
    Divisor operator-(const Divisor& o) const { return *this + (-o); }
    Divisor scaled(long k) const;

    bool equals(const Divisor& o) const;

    /// Every conductor automorphism permutes the (point, mult) pairs.
    bool galois_invariant() const;

    /// Point-wise coordinate change (diagonal/permutation actions of the
    /// ambient curve's automorphisms).
    Divisor apply(const Mat& T) const;
    Divisor galois_apply(unsigned u) const;

    /// Divisor file body: one "mult (c0, c1, c2)" line per entry.
    std::string str() const;
    static Divisor parse(std::istream& in, std::shared_ptr<const PlaneCurve> curve);

private:
    std::shared_ptr<const PlaneCurve> curve_;
    std::vector<Entry> entries_;  // canonical order, no zero mults

    void require_same_curve(const Divisor& o) const;
    void normalize();
};

}  // namespace sdr
