#include "sdr/matrix.hpp"

#include "sdr/errors.hpp"

namespace sdr {

Mat Mat::identity(const FieldContext& ctx, std::size_t n) {
    Mat m(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = FieldElement::one(ctx);
    return m;
}

Mat Mat::transpose() const {
    Mat t(ctx_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_ || ctx_ != o.ctx_) throw error("matrix shape/context mismatch");
    Mat r(ctx_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

Mat Mat::operator*(const FieldElement& c) const {
    Mat r = *this;
    for (auto& x : r.a_) x *= c;
    return r;
}

bool Mat::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

FieldElement Mat::det() const {
    if (rows_ != cols_) throw error("determinant of a non-square matrix");
    std::size_t n = rows_;
    if (n == 0) return FieldElement::one(ctx_);
    Mat w = *this;
    FieldElement prev = FieldElement::one(ctx_);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k).is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && w.at(piv, k).is_zero()) ++piv;
            if (piv == n) return FieldElement::zero(ctx_);
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(piv, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                w.at(i, j) = (w.at(k, k) * w.at(i, j) - w.at(i, k) * w.at(k, j)) / prev;
            w.at(i, k) = FieldElement::zero(ctx_);
        }
        prev = w.at(k, k);
    }
    FieldElement d = w.at(n - 1, n - 1);
    return negate ? -d : d;
}

Mat Mat::inverse() const {
    if (rows_ != cols_) throw singular_matrix("inverse of a non-square matrix");
    std::size_t n = rows_;
    Mat w = *this;
    Mat inv = identity(ctx_, n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && w.at(piv, k).is_zero()) ++piv;
        if (piv == n) throw singular_matrix("singular matrix");
        if (piv != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(w.at(k, j), w.at(piv, j));
                std::swap(inv.at(k, j), inv.at(piv, j));
            }
        FieldElement s = w.at(k, k).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            w.at(k, j) *= s;
            inv.at(k, j) *= s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || w.at(i, k).is_zero()) continue;
            FieldElement f = w.at(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                w.at(i, j) -= f * w.at(k, j);
                inv.at(i, j) -= f * inv.at(k, j);
            }
        }
    }
    return inv;
}

}  // namespace sdr
