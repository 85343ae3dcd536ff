#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sdr/cyclotomic.hpp"
#include "sdr/finite_field.hpp"
#include "sdr/rational.hpp"

namespace sdr {

/// Coefficient domain tag: Q, Q(zeta_m), or F_{p^k}. Cheap to copy and
/// compare; the heavy reduction data lives in shared per-domain tables.
struct FieldContext {
    enum class Kind : std::uint8_t { rational, cyclotomic, finite };

    Kind kind = Kind::rational;
    unsigned conductor = 0;  // cyclotomic
    std::uint32_t p = 0;     // finite
    std::uint32_t k = 0;     // finite extension degree

    static FieldContext Q() { return {}; }
    static FieldContext cyclo(unsigned m);
    static FieldContext finite(std::uint32_t p, std::uint32_t k = 1);

    bool operator==(const FieldContext&) const = default;

    bool is_rational() const { return kind == Kind::rational; }
    bool is_cyclotomic() const { return kind == Kind::cyclotomic; }
    bool is_finite() const { return kind == Kind::finite; }

    std::uint64_t q() const;           // finite only
    unsigned characteristic() const;   // 0 for Q and Q(zeta_m)

    /// "Q", "Q(z42)", "F7", "F9"
    std::string str() const;
    /// Parse the header syntax above.
    static FieldContext parse(const std::string& text);
};

/// Smallest common context both operands embed into: Q before Q(zeta_m),
/// conductors join by lcm; finite fields must match exactly.
std::optional<FieldContext> unify(const FieldContext& a, const FieldContext& b);

/// Exact scalar in the domain named by its context. Immutable value type.
class FieldElement {
public:
    FieldElement() : ctx_(FieldContext::Q()), v_(Rational(0)) {}

    static FieldElement zero(const FieldContext& ctx);
    static FieldElement one(const FieldContext& ctx);
    static FieldElement integer(const FieldContext& ctx, long n);
    static FieldElement from_rational(const FieldContext& ctx, const Rational& r);
    /// zeta_m as an element of Q(zeta_m).
    static FieldElement zeta(unsigned m);
    /// Element of F_{p^k} from its canonical enumeration index.
    static FieldElement from_index(const FieldContext& ctx, std::uint64_t idx);

    const FieldContext& context() const { return ctx_; }

    bool is_zero() const;
    bool is_one() const;
    /// True when the value lies in the prime field Q (rational and
    /// cyclotomic contexts only).
    bool is_rational_valued() const;
    /// The rational value; requires is_rational_valued().
    Rational rational_value() const;

    FieldElement operator-() const;
    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

    FieldElement inverse() const;
    FieldElement pow(long e) const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    /// Reinterpret in a larger context (Q -> Q(zeta_M), or conductor m | M
    /// via zeta_m -> zeta_M^{M/m}). A field homomorphism.
    FieldElement embed(const FieldContext& target) const;

    /// Image under the conductor automorphism t -> t^u (rationals are fixed).
    FieldElement galois_apply(unsigned u) const;

    /// Distinct conjugates, ordered by increasing automorphism exponent.
    std::vector<FieldElement> galois_orbit() const;

    /// Multiplication by an integer exponent reduced into the context
    /// (used by characteristic-aware derivatives).
    FieldElement times_integer(long n) const;

    /// Canonical enumeration index of a finite-field element.
    std::uint64_t index() const;

    /// Canonical text form; re-parseable by the element grammar.
    std::string str() const;
    /// Needs parentheses when multiplied against another factor in print form.
    bool needs_parens_in_product() const;

    /// Total ordering used for canonical sorting of printed objects.
    static int compare(const FieldElement& a, const FieldElement& b);

private:
    using CVec = std::vector<Rational>;
    using FVec = std::vector<std::uint32_t>;

    FieldContext ctx_;
    std::variant<Rational, CVec, FVec> v_;

    FieldElement(FieldContext ctx, std::variant<Rational, CVec, FVec> v)
        : ctx_(ctx), v_(std::move(v)) {}

    const CyclotomicTable& cyclo() const { return cyclotomic_table(ctx_.conductor); }
    const FiniteFieldTable& ff() const { return finite_field(ctx_.p, ctx_.k); }
    void require_same_context(const FieldElement& o) const;
};

/// Both elements promoted into unify(contexts); throws context_mismatch if
/// no common context exists.
std::pair<FieldElement, FieldElement> promote(const FieldElement& a, const FieldElement& b);

}  // namespace sdr
