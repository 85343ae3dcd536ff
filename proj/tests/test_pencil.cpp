#include <random>
#include <sstream>

#include "doctest.h"
#include "sdr/errors.hpp"
#include "sdr/parse.hpp"
#include "sdr/pencil.hpp"

using namespace sdr;

namespace {

const FieldContext Q = FieldContext::Q();

// Independent oracle: literal cofactor expansion of the pencil matrix.
TernaryPoly cofactor_oracle(const SymmetricPencil& pen) {
    const FieldContext& ctx = pen.context();
    std::vector<std::vector<TernaryPoly>> L(pen.n,
                                            std::vector<TernaryPoly>(pen.n, TernaryPoly::zero(ctx)));
    for (std::size_t i = 0; i < pen.n; ++i)
        for (std::size_t j = 0; j < pen.n; ++j)
            for (int v = 0; v < 3; ++v) {
                Monomial m;
                m.e[v] = 1;
                L[i][j].add_term(m, pen.M[v].at(i, j));
            }
    std::function<TernaryPoly(std::vector<std::size_t>, std::size_t)> det =
        [&](std::vector<std::size_t> cols, std::size_t row) {
            if (cols.size() == 1) return L[row][cols[0]];
            TernaryPoly acc(ctx);
            for (std::size_t k = 0; k < cols.size(); ++k) {
                std::vector<std::size_t> rest;
                for (std::size_t j = 0; j < cols.size(); ++j)
                    if (j != k) rest.push_back(cols[j]);
                TernaryPoly term = L[row][cols[k]] * det(rest, row + 1);
                acc = (k % 2 == 0) ? acc + term : acc - term;
            }
            return acc;
        };
    std::vector<std::size_t> cols(pen.n);
    for (std::size_t i = 0; i < pen.n; ++i) cols[i] = i;
    return det(cols, 0);
}

SymmetricPencil random_pencil(const FieldContext& ctx, std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> coef(-4, 4);
    std::array<Mat, 3> M{Mat(ctx, n, n), Mat(ctx, n, n), Mat(ctx, n, n)};
    for (int v = 0; v < 3; ++v)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                auto e = FieldElement::integer(ctx, coef(rng));
                M[v].at(i, j) = e;
                M[v].at(j, i) = e;
            }
    long a = coef(rng);
    if (a == 0) a = 1;
    return SymmetricPencil(std::move(M), FieldElement::integer(ctx, a));
}

CongruenceMove random_move(const FieldContext& ctx, std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> coef(-3, 3);
    while (true) {
        Mat P(ctx, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) P.at(i, j) = FieldElement::integer(ctx, coef(rng));
        long a = coef(rng);
        if (a == 0) continue;
        auto av = FieldElement::integer(ctx, a);
        if (P.det().is_zero() || av.is_zero()) continue;
        return CongruenceMove(std::move(P), av);
    }
}

}  // namespace

TEST_CASE("the classical 4x4 pencil reproduces the quartic") {
    SymmetricPencil pen = SymmetricPencil::klein();
    TernaryPoly K = parse_poly("X0^3*X1+X1^3*X2+X2^3*X0", Q);
    CHECK(pencil_det(pen) == -K);
    CHECK(verify_representation(K, pen));

    SymmetricPencil wrong({pen.M[0], pen.M[1], pen.M[2]}, FieldElement::one(Q));
    CHECK(check_representation(K, wrong) == RepresentationCheck::value_mismatch);
}

TEST_CASE("the 2x2 conic pencil") {
    SymmetricPencil pen = SymmetricPencil::conic_unit();
    TernaryPoly C = parse_poly("X0^2+X1^2-X2^2", Q);
    CHECK(pencil_det(pen) == -C);
    CHECK(verify_representation(C, pen));
}

TEST_CASE("diagonal pencil determinant") {
    std::array<Mat, 3> M{Mat(Q, 3, 3), Mat(Q, 3, 3), Mat(Q, 3, 3)};
    for (int v = 0; v < 3; ++v) M[v].at(v, v) = FieldElement::one(Q);
    SymmetricPencil pen(std::move(M), FieldElement::one(Q));
    CHECK(pencil_det(pen) == parse_poly("X0*X1*X2", Q));
}

TEST_CASE("degree mismatch is reported distinctly") {
    SymmetricPencil pen = SymmetricPencil::conic_unit();
    CHECK(check_representation(parse_poly("X0^3+X1^3+X2^3", Q), pen) ==
          RepresentationCheck::degree_mismatch);
}

TEST_CASE("fraction-free determinant agrees with cofactor expansion") {
    std::mt19937_64 rng(14);
    for (const auto& ctx : {FieldContext::Q(), FieldContext::finite(5)}) {
        for (std::size_t n : {1u, 2u, 3u, 4u}) {
            for (int trial = 0; trial < 8; ++trial) {
                SymmetricPencil pen = random_pencil(ctx, n, rng);
                CHECK(pencil_det(pen) == cofactor_oracle(pen));
            }
        }
    }
}

TEST_CASE("congruence transforms") {
    SymmetricPencil pen = SymmetricPencil::klein();
    TernaryPoly K = parse_poly("X0^3*X1+X1^3*X2+X2^3*X0", Q);

    CongruenceMove ident(Mat::identity(Q, 4), FieldElement::one(Q));
    SymmetricPencil same = congruence_transform(pen, ident);
    CHECK(pencil_det(same) == pencil_det(pen));
    CHECK(same.a == pen.a);

    std::mt19937_64 rng(99);
    // determinant transforms by a^n (det P)^2
    for (int trial = 0; trial < 10; ++trial) {
        CongruenceMove mv = random_move(Q, 4, rng);
        SymmetricPencil moved = congruence_transform(pen, mv);
        FieldElement dp = mv.P.det();
        FieldElement factor = mv.a.pow(4) * dp * dp;
        CHECK(pencil_det(moved) == pencil_det(pen) * factor);
        CHECK(verify_representation(K, moved));
    }

    // scalar move: each matrix scaled, det scaled by c^4
    CongruenceMove scal(Mat::identity(Q, 4), FieldElement::integer(Q, 3));
    SymmetricPencil scaled = congruence_transform(pen, scal);
    CHECK(pencil_det(scaled) == pencil_det(pen) * FieldElement::integer(Q, 81));
    CHECK(verify_representation(K, scaled));
}

TEST_CASE("verification is congruence-invariant over Q and F5") {
    std::mt19937_64 rng(123);
    for (const auto& ctx : {FieldContext::Q(), FieldContext::finite(5)}) {
        for (int trial = 0; trial < 50; ++trial) {
            SymmetricPencil pen = random_pencil(ctx, 3, rng);
            TernaryPoly F = pencil_det(pen) * pen.a;
            if (F.is_zero()) continue;
            CHECK(verify_representation(F, pen));
            CongruenceMove mv = random_move(ctx, 3, rng);
            CHECK(verify_representation(F, congruence_transform(pen, mv)));
        }
    }
}

TEST_CASE("pencil with zero M2 has no X2 monomials") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        SymmetricPencil pen = random_pencil(Q, 3, rng);
        std::array<Mat, 3> M{pen.M[0], pen.M[1], Mat(Q, 3, 3)};
        SymmetricPencil flat(std::move(M), pen.a);
        TernaryPoly det = pencil_det(flat);
        for (const auto& [m, c] : det.terms()) CHECK(m.e[2] == 0);
    }
}

TEST_CASE("transposing the matrices is a no-op") {
    std::mt19937_64 rng(21);
    SymmetricPencil pen = random_pencil(Q, 4, rng);
    std::array<Mat, 3> M{pen.M[0].transpose(), pen.M[1].transpose(), pen.M[2].transpose()};
    SymmetricPencil t(std::move(M), pen.a);
    CHECK(pencil_det(t) == pencil_det(pen));
}

TEST_CASE("pencil files round-trip and validate") {
    SymmetricPencil pen = SymmetricPencil::klein();
    std::istringstream in(pen.str());
    SymmetricPencil back = SymmetricPencil::parse(in);
    CHECK(back.n == 4);
    CHECK(back.a == pen.a);
    for (int v = 0; v < 3; ++v) CHECK(back.M[v] == pen.M[v]);

    // asymmetric entries are rejected, not silently fixed
    std::istringstream bad(
        "field: Q\nn: 2\na: 1\n"
        "1 2\n3 1\n"
        "0 0\n0 0\n"
        "0 0\n0 0\n");
    CHECK_THROWS_AS(SymmetricPencil::parse(bad), error);

    std::istringstream truncated("field: Q\nn: 2\na: 1\n1 0\n");
    CHECK_THROWS_AS(SymmetricPencil::parse(truncated), error);

    std::istringstream zero_a("field: Q\nn: 1\na: 0\n1\n1\n1\n");
    CHECK_THROWS_AS(SymmetricPencil::parse(zero_a), error);
}
