#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sdr/pencil.hpp"
#include "sdr/ternary_poly.hpp"

namespace sdr {

/// Index-arithmetic tables for F_q: elements are their canonical indices
/// 0..q-1, operations are flat table lookups. Built once from the generic
/// field arithmetic, so the kernels inherit its semantics.
struct FqTable {
    FieldContext ctx;
    std::uint32_t q = 0;
    std::vector<std::uint8_t> add_t, mul_t;  // q*q
    std::vector<std::uint8_t> neg_t, inv_t;  // q (inv_t[0] unused)

    std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_t[a * q + b]; }
    std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_t[a * q + b]; }
    std::uint8_t neg(std::uint8_t a) const { return neg_t[a]; }
    std::uint8_t inv(std::uint8_t a) const { return inv_t[a]; }

    static FqTable build(const FieldContext& ctx);
};

/// One hit of the exhaustive search: the 3*T upper-triangle digits of
/// (M0, M1, M2) (row-major per matrix, M0 first) and the scalar index.
struct FoundPencil {
    std::vector<std::uint8_t> entries;
    std::uint8_t a;

    bool operator==(const FoundPencil&) const = default;
    bool operator<(const FoundPencil& o) const {
        return entries != o.entries ? entries < o.entries : a < o.a;
    }
};

struct EquivalenceClasses {
    std::size_t count = 0;
    std::vector<std::size_t> class_of;         // found index -> class id
    std::vector<std::size_t> representatives;  // least found index per class
};

struct SearchOptions {
    std::uint64_t budget = 1ull << 30;  // candidate matrix triples
    int workers = 0;                    // 0 = library default
    bool classify = true;
};

struct SearchReport {
    FieldContext field;
    std::string curve;
    unsigned n = 0;
    std::uint64_t candidates = 0;  // q^{3T}
    std::uint64_t total = 0;       // candidates * (q-1)
    std::vector<FoundPencil> found;
    EquivalenceClasses classes;
    double millis = 0.0;

    std::string summary() const;  // machine-readable block (no timing line)
};

/// Serial reference enumeration over candidate indices [lo, hi).
std::vector<FoundPencil> enumerate_range_serial(const TernaryPoly& F, unsigned n,
                                                std::uint64_t lo, std::uint64_t hi);

/// OpenMP enumeration of the full range, chunk-merged deterministically.
std::vector<FoundPencil> enumerate_parallel(const TernaryPoly& F, unsigned n, int workers);

/// Orbit partition under (P, a) -> a * P^T M_i P, by closure under the
/// standard GL_n(F_q) generators plus scalar moves. The found set must be
/// closed (it is, when it came from a complete enumeration).
EquivalenceClasses classify_equivalence(const std::vector<FoundPencil>& found,
                                        const FieldContext& ctx, unsigned n);

/// Full search: budget check, kernel, post-hoc verification hook, classes.
/// Throws budget_exceeded when q^{3T} is over options.budget.
SearchReport enumerate_representations(const TernaryPoly& F, unsigned n,
                                       const SearchOptions& options = {});

/// Serial twin of enumerate_representations (reference path for tests and
/// the benchmark).
SearchReport enumerate_representations_serial(const TernaryPoly& F, unsigned n,
                                              const SearchOptions& options = {});

/// Decode a search hit back into an exact pencil.
SymmetricPencil decode_pencil(const FoundPencil& fp, const FieldContext& ctx, unsigned n);

}  // namespace sdr
