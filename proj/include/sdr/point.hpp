#pragma once

#include <array>
#include <string>

#include "sdr/field.hpp"
#include "sdr/matrix.hpp"

namespace sdr {

/// Point of P^2 with exact coordinates in one field context, normalized so
/// the last nonzero coordinate is 1. Equality is exact equality of the
/// normalized coordinates.
class ProjectivePoint {
public:
    /// Coordinates are unified into a common context, then normalized.
    ProjectivePoint(FieldElement c0, FieldElement c1, FieldElement c2);

    const std::array<FieldElement, 3>& coords() const { return c_; }
    const FieldContext& context() const { return c_[0].context(); }

    ProjectivePoint embedded(const FieldContext& target) const;

    /// Image under an invertible coordinate change, renormalized.
    ProjectivePoint apply(const Mat& T) const;

    /// Coordinate-wise conductor automorphism t -> t^u.
    ProjectivePoint galois_apply(unsigned u) const;

    bool operator==(const ProjectivePoint& o) const;
    bool operator!=(const ProjectivePoint& o) const { return !(*this == o); }

    /// "(c0, c1, c2)" in normalized form.
    std::string str() const;

    /// Canonical ordering for printed divisor tables.
    static bool less(const ProjectivePoint& a, const ProjectivePoint& b);

private:
    std::array<FieldElement, 3> c_;
    void normalize();
};

}  // namespace sdr
