#include "sdr/pencil.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "sdr/errors.hpp"
#include "sdr/parse.hpp"

namespace sdr {

SymmetricPencil::SymmetricPencil(std::array<Mat, 3> mats, FieldElement scalar)
    : n(mats[0].rows()), M(std::move(mats)), a(std::move(scalar)) {
    for (const auto& m : M) {
        if (m.rows() != n || m.cols() != n) throw error("pencil matrices must be square of one size");
        if (m.context() != a.context()) throw context_mismatch("pencil context mismatch");
        if (!m.is_symmetric()) throw error("pencil matrices must be symmetric");
    }
    if (a.is_zero()) throw error("pencil scalar must be nonzero");
    if (n == 0) throw error("pencil size must be positive");
}

CongruenceMove::CongruenceMove(Mat P_, FieldElement a_) : P(std::move(P_)), a(std::move(a_)) {
    if (a.is_zero()) throw error("congruence scalar must be nonzero");
    if (P.det().is_zero()) throw singular_matrix("congruence matrix is singular");
}

namespace {

using PolyMat = std::vector<std::vector<TernaryPoly>>;

PolyMat linear_matrix(const SymmetricPencil& pen) {
    const FieldContext& ctx = pen.context();
    PolyMat L(pen.n, std::vector<TernaryPoly>(pen.n, TernaryPoly::zero(ctx)));
    for (std::size_t i = 0; i < pen.n; ++i)
        for (std::size_t j = 0; j < pen.n; ++j) {
            TernaryPoly e(ctx);
            for (int v = 0; v < 3; ++v) {
                Monomial m;
                m.e[v] = 1;
                e.add_term(m, pen.M[v].at(i, j));
            }
            L[i][j] = std::move(e);
        }
    return L;
}

// Bareiss on a matrix of polynomials; every division is exact.
TernaryPoly bareiss_det(PolyMat A, const FieldContext& ctx) {
    const std::size_t n = A.size();
    TernaryPoly prev = TernaryPoly::constant(FieldElement::one(ctx));
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (A[k][k].is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && A[piv][k].is_zero()) ++piv;
            if (piv == n) return TernaryPoly::zero(ctx);
            std::swap(A[k], A[piv]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                TernaryPoly num = A[k][k] * A[i][j] - A[i][k] * A[k][j];
                auto q = num.exact_divide(prev);
                if (!q) throw error("fraction-free elimination: inexact division");
                A[i][j] = std::move(*q);
            }
            A[i][k] = TernaryPoly::zero(ctx);
        }
        prev = A[k][k];
    }
    return negate ? -A[n - 1][n - 1] : A[n - 1][n - 1];
}

}  // namespace

TernaryPoly pencil_det(const SymmetricPencil& pen) {
    return bareiss_det(linear_matrix(pen), pen.context());
}

RepresentationCheck check_representation(const TernaryPoly& F, const SymmetricPencil& pen) {
    auto d = F.homogeneous_degree();
    if (!d || *d != pen.n) return RepresentationCheck::degree_mismatch;
    TernaryPoly rhs = pencil_det(pen) * pen.a;
    return F == rhs ? RepresentationCheck::match : RepresentationCheck::value_mismatch;
}

bool verify_representation(const TernaryPoly& F, const SymmetricPencil& pen) {
    return check_representation(F, pen) == RepresentationCheck::match;
}

SymmetricPencil congruence_transform(const SymmetricPencil& pen, const CongruenceMove& mv) {
    if (mv.P.rows() != pen.n) throw error("congruence move size mismatch");
    if (mv.P.context() != pen.context()) throw context_mismatch("congruence context mismatch");
    Mat Pt = mv.P.transpose();
    std::array<Mat, 3> out{pen.M[0], pen.M[1], pen.M[2]};
    for (int v = 0; v < 3; ++v) out[v] = (Pt * pen.M[v] * mv.P) * mv.a;
    FieldElement dp = mv.P.det();
    FieldElement a2 = pen.a * mv.a.pow((long)pen.n).inverse() * (dp * dp).inverse();
    return SymmetricPencil(std::move(out), a2);
}

SymmetricPencil SymmetricPencil::klein() {
    FieldContext ctx = FieldContext::Q();
    Mat M0(ctx, 4, 4), M1(ctx, 4, 4), M2(ctx, 4, 4);
    auto one = FieldElement::one(ctx);
    // X0: diag(1,0,0,0) plus the (2,3) pairing; X1, X2 cyclically.
    M0.at(0, 0) = one;
    M0.at(2, 3) = M0.at(3, 2) = -one;
    M1.at(1, 1) = one;
    M1.at(0, 3) = M1.at(3, 0) = -one;
    M2.at(2, 2) = one;
    M2.at(1, 3) = M2.at(3, 1) = -one;
    return SymmetricPencil({M0, M1, M2}, -one);
}

SymmetricPencil SymmetricPencil::conic_unit() {
    FieldContext ctx = FieldContext::Q();
    Mat M0(ctx, 2, 2), M1(ctx, 2, 2), M2(ctx, 2, 2);
    auto one = FieldElement::one(ctx);
    M0.at(0, 0) = one;
    M0.at(1, 1) = -one;
    M1.at(0, 1) = M1.at(1, 0) = one;
    M2.at(0, 0) = one;
    M2.at(1, 1) = one;
    return SymmetricPencil({M0, M1, M2}, -one);
}

std::string SymmetricPencil::str() const {
    std::ostringstream out;
    out << "field: " << context().str() << "\n";
    out << "n: " << n << "\n";
    out << "a: " << a.str() << "\n";
    for (int v = 0; v < 3; ++v) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (j) out << " ";
                out << M[v].at(i, j).str();
            }
            out << "\n";
        }
    }
    return out.str();
}

namespace {

std::string expect_header(std::istream& in, const std::string& key) {
    std::string line;
    do {
        if (!std::getline(in, line)) throw error("pencil file: missing '" + key + "' header");
    } while (line.find_first_not_of(" \t\r") == std::string::npos);
    auto pos = line.find(':');
    if (pos == std::string::npos || line.substr(0, pos) != key)
        throw error("pencil file: expected '" + key + ":' header, got '" + line + "'");
    return line.substr(pos + 1);
}

}  // namespace

SymmetricPencil SymmetricPencil::parse(std::istream& in) {
    FieldContext ctx = FieldContext::parse(expect_header(in, "field"));
    std::size_t n = (std::size_t)std::stoul(expect_header(in, "n"));
    if (n == 0 || n > 64) throw error("pencil file: unreasonable size n");
    FieldElement a = parse_element(expect_header(in, "a"), ctx);
    std::array<Mat, 3> mats{Mat(ctx, n, n), Mat(ctx, n, n), Mat(ctx, n, n)};
    for (int v = 0; v < 3; ++v)
        for (std::size_t i = 0; i < n; ++i) {
            std::string line;
            do {
                if (!std::getline(in, line)) throw error("pencil file: missing matrix rows");
            } while (line.find_first_not_of(" \t\r") == std::string::npos);
            std::istringstream row(line);
            for (std::size_t j = 0; j < n; ++j) {
                std::string tok;
                if (!(row >> tok)) throw error("pencil file: short matrix row");
                mats[v].at(i, j) = parse_element(tok, ctx);
            }
        }
    // symmetric-entry redundancy is validated by the constructor
    return SymmetricPencil(std::move(mats), a);
}

SymmetricPencil SymmetricPencil::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open pencil file '" + path + "'");
    return parse(in);
}

}  // namespace sdr
