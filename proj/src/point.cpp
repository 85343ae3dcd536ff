#include "sdr/point.hpp"

#include "sdr/errors.hpp"

namespace sdr {

ProjectivePoint::ProjectivePoint(FieldElement c0, FieldElement c1, FieldElement c2)
    : c_{std::move(c0), std::move(c1), std::move(c2)} {
    auto ctx = unify(c_[0].context(), c_[1].context());
    if (ctx) ctx = unify(*ctx, c_[2].context());
    if (!ctx) throw context_mismatch("point coordinates in incompatible contexts");
    for (auto& c : c_) c = c.embed(*ctx);
    normalize();
}

void ProjectivePoint::normalize() {
    int last = -1;
    for (int i = 2; i >= 0; --i)
        if (!c_[i].is_zero()) {
            last = i;
            break;
        }
    if (last < 0) throw degenerate_input("projective point needs a nonzero coordinate");
    FieldElement inv = c_[last].inverse();
    for (auto& c : c_) c *= inv;
}

ProjectivePoint ProjectivePoint::embedded(const FieldContext& target) const {
    return ProjectivePoint(c_[0].embed(target), c_[1].embed(target), c_[2].embed(target));
}

ProjectivePoint ProjectivePoint::apply(const Mat& T) const {
    if (T.rows() != 3 || T.cols() != 3) throw error("point transform must be 3x3");
    auto ctx = unify(context(), T.context());
    if (!ctx) throw context_mismatch("transform context incompatible with point");
    if (T.det().is_zero()) throw singular_matrix("point transform is singular");
    std::array<FieldElement, 3> out{FieldElement::zero(*ctx), FieldElement::zero(*ctx),
                                    FieldElement::zero(*ctx)};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[i] += T.at(i, j).embed(*ctx) * c_[j].embed(*ctx);
    return ProjectivePoint(out[0], out[1], out[2]);
}

ProjectivePoint ProjectivePoint::galois_apply(unsigned u) const {
    return ProjectivePoint(c_[0].galois_apply(u), c_[1].galois_apply(u), c_[2].galois_apply(u));
}

bool ProjectivePoint::operator==(const ProjectivePoint& o) const {
    return c_[0] == o.c_[0] && c_[1] == o.c_[1] && c_[2] == o.c_[2];
}

std::string ProjectivePoint::str() const {
    return "(" + c_[0].str() + ", " + c_[1].str() + ", " + c_[2].str() + ")";
}

bool ProjectivePoint::less(const ProjectivePoint& a, const ProjectivePoint& b) {
    return a.str() < b.str();
}

}  // namespace sdr
