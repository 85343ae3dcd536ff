#pragma once

#include <cstddef>
#include <vector>

#include "sdr/field.hpp"

namespace sdr {

/// Dense matrix over one field context.
class Mat {
public:
    Mat(FieldContext ctx, std::size_t rows, std::size_t cols)
        : ctx_(ctx), rows_(rows), cols_(cols), a_(rows * cols, FieldElement::zero(ctx)) {}

    static Mat identity(const FieldContext& ctx, std::size_t n);

    const FieldContext& context() const { return ctx_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElement& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const FieldElement& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Mat transpose() const;
    Mat operator*(const Mat& o) const;
    Mat operator*(const FieldElement& c) const;
    bool operator==(const Mat& o) const = default;

    bool is_symmetric() const;

    /// Exact determinant by fraction-free (Bareiss) elimination with row
    /// pivoting. Keeps entries integral when the input is integral.
    FieldElement det() const;

    /// Inverse by Gauss-Jordan; throws singular_matrix.
    Mat inverse() const;

private:
    FieldContext ctx_;
    std::size_t rows_, cols_;
    std::vector<FieldElement> a_;
};

}  // namespace sdr
