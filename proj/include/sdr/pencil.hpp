#pragma once

#include <array>
#include <iosfwd>
#include <string>

#include "sdr/matrix.hpp"
#include "sdr/ternary_poly.hpp"

namespace sdr {

/// Triple of symmetric n x n matrices plus a nonzero scalar a; represents
/// the curve a * det(X0 M0 + X1 M1 + X2 M2) = 0.
struct SymmetricPencil {
    std::size_t n;
    std::array<Mat, 3> M;
    FieldElement a;

    SymmetricPencil(std::array<Mat, 3> mats, FieldElement scalar);

    const FieldContext& context() const { return a.context(); }

    static SymmetricPencil klein();       // the classical 4x4 pencil
    static SymmetricPencil conic_unit();  // [[X0+X2, X1], [X1, -X0+X2]], a = -1

    /// Stable text form (the pencil file format).
    std::string str() const;
    static SymmetricPencil parse(std::istream& in);
    static SymmetricPencil parse_file(const std::string& path);
};

struct CongruenceMove {
    Mat P;
    FieldElement a;

    CongruenceMove(Mat P_, FieldElement a_);
};

/// det(X0 M0 + X1 M1 + X2 M2) expanded exactly: fraction-free elimination
/// over the polynomial ring (cofactor expansion below size 5).
TernaryPoly pencil_det(const SymmetricPencil& pen);

enum class RepresentationCheck { match, degree_mismatch, value_mismatch };

/// Whether F == a * pencil_det(pen) exactly.
RepresentationCheck check_representation(const TernaryPoly& F, const SymmetricPencil& pen);
bool verify_representation(const TernaryPoly& F, const SymmetricPencil& pen);

/// M_i -> a_mv * P^T M_i P; the pencil's own scalar is rescaled by
/// a_mv^{-n} (det P)^{-2} so the represented curve is unchanged.
SymmetricPencil congruence_transform(const SymmetricPencil& pen, const CongruenceMove& mv);

}  // namespace sdr
