#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sdr {

/// Arithmetic data for F_{p^k}. Elements are coefficient vectors of length k
/// over F_p, reduced modulo a fixed monic irreducible of degree k (the
/// lexicographically least one, so representatives are reproducible).
/// For k = 1 the modulus is empty and elements are single residues.
struct FiniteFieldTable {
    std::uint32_t p = 0;
    std::uint32_t k = 1;
    // Monic modulus t^k + m_{k-1} t^{k-1} + ... + m_0; stores m_0..m_{k-1}.
    std::vector<std::uint32_t> modulus;

    std::uint64_t q() const;

    using Elem = std::vector<std::uint32_t>;

    Elem zero() const { return Elem(k, 0); }
    Elem one() const;
    Elem from_integer(long long n) const;

    bool is_zero(const Elem& a) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;

    /// Index of an element in the canonical enumeration 0..q-1
    /// (coefficient vector read as a base-p integer, c_0 least significant).
    std::uint64_t index_of(const Elem& a) const;
    Elem from_index(std::uint64_t i) const;

    std::string str(const Elem& a) const;
};

/// Shared table for F_{p^k}; computed once per (p, k) and cached.
/// Throws sdr::error if p is not prime.
const FiniteFieldTable& finite_field(std::uint32_t p, std::uint32_t k = 1);

bool is_prime_u32(std::uint32_t n);

}  // namespace sdr
