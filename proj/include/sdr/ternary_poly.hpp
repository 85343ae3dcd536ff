#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sdr/field.hpp"
#include "sdr/monomial.hpp"

namespace sdr {

/// Sparse homogeneous-or-not polynomial in X0, X1, X2 over one field
/// context. Terms are kept in graded-lex descending order (leading term
/// first) and never store zero coefficients.
class TernaryPoly {
public:
    using TermMap = std::map<Monomial, FieldElement, GrlexDesc>;

    explicit TernaryPoly(FieldContext ctx) : ctx_(ctx) {}
    TernaryPoly(FieldContext ctx, TermMap terms) : ctx_(ctx), terms_(std::move(terms)) {}

    static TernaryPoly zero(const FieldContext& ctx) { return TernaryPoly(ctx); }
    static TernaryPoly constant(const FieldElement& c);
    static TernaryPoly variable(const FieldContext& ctx, int i, std::uint32_t power = 1);
    static TernaryPoly term(const FieldElement& c, const Monomial& m);

    const FieldContext& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Largest total degree among terms; 0 for the zero polynomial.
    std::uint32_t degree() const;
    /// Total degree shared by all terms, if any (zero polynomial -> nullopt).
    std::optional<std::uint32_t> homogeneous_degree() const;

    void add_term(const Monomial& m, const FieldElement& c);

    TernaryPoly operator-() const;
    TernaryPoly operator+(const TernaryPoly& o) const;
    TernaryPoly operator-(const TernaryPoly& o) const;
    TernaryPoly operator*(const TernaryPoly& o) const;
    TernaryPoly operator*(const FieldElement& c) const;
    TernaryPoly pow(std::uint32_t k) const;

    bool operator==(const TernaryPoly& o) const { return ctx_ == o.ctx_ && terms_ == o.terms_; }
    bool operator!=(const TernaryPoly& o) const { return !(*this == o); }

    FieldElement evaluate(const std::array<FieldElement, 3>& x) const;

    /// f(T X): X_i is replaced by sum_j T[i][j] X_j. T must be invertible.
    TernaryPoly substitute_linear(const std::array<std::array<FieldElement, 3>, 3>& T) const;

    /// d/dX_i, exponents reduced into the context.
    TernaryPoly derivative(int i) const;

    /// Quotient q with *this == q * g, if it exists. Graded-lex leading-term
    /// division; g must be nonzero.
    std::optional<TernaryPoly> exact_divide(const TernaryPoly& g) const;

    /// Same polynomial over an extension of its coefficient context.
    TernaryPoly embedded(const FieldContext& target) const;

    /// Canonical print: graded-lex descending, explicit * and ^.
    std::string str() const;

private:
    FieldContext ctx_;
    TermMap terms_;
};

/// Homogeneous binary form of declared degree d in parameters (u, v):
/// coefficient i multiplies u^{d-i} v^i. The declared degree is kept even
/// when leading coefficients vanish.
struct BinaryForm {
    FieldContext ctx;
    std::uint32_t formal_degree = 0;
    std::vector<FieldElement> coeff;  // length formal_degree + 1

    static BinaryForm zero(const FieldContext& c, std::uint32_t d);

    bool is_zero() const;
    BinaryForm operator*(const BinaryForm& o) const;
    BinaryForm operator*(const FieldElement& c) const;
    bool operator==(const BinaryForm& o) const = default;
    FieldElement evaluate(const FieldElement& u, const FieldElement& v) const;
    std::string str() const;  // in u, v
};

/// Line restriction. The line sum_i L[i] X_i = 0 is solved for the variable
/// of its last nonzero coefficient; the remaining two variables become the
/// parameters (u, v) in index order. `point_at(u, v)` reproduces the
/// corresponding point of the line.
struct LineParametrization {
    std::array<FieldElement, 3> L;
    int solved = 2;                                // index of the solved variable
    std::array<int, 2> params{0, 1};               // indices carrying u and v
    std::array<std::array<FieldElement, 2>, 3> B;  // column basis: point = u*B[.][0] + v*B[.][1]

    std::array<FieldElement, 3> point_at(const FieldElement& u, const FieldElement& v) const;
};

LineParametrization parametrize_line(const FieldContext& ctx,
                                     const std::array<FieldElement, 3>& L);

/// Restriction of a homogeneous f to the line L under the parametrization
/// above; degree of the form equals deg f.
BinaryForm restrict_to_line(const TernaryPoly& f, const std::array<FieldElement, 3>& L);

}  // namespace sdr
