#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace sdr {

/// Exponent triple for X0, X1, X2.
struct Monomial {
    std::array<std::uint32_t, 3> e{0, 0, 0};

    std::uint32_t total() const { return e[0] + e[1] + e[2]; }

    bool operator==(const Monomial&) const = default;

    Monomial operator*(const Monomial& o) const {
        return {{e[0] + o.e[0], e[1] + o.e[1], e[2] + o.e[2]}};
    }
    bool divides(const Monomial& o) const {
        return e[0] <= o.e[0] && e[1] <= o.e[1] && e[2] <= o.e[2];
    }
    Monomial operator/(const Monomial& o) const {
        return {{e[0] - o.e[0], e[1] - o.e[1], e[2] - o.e[2]}};
    }

    std::string str() const {
        std::string s;
        for (int i = 0; i < 3; ++i) {
            if (e[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += "X" + std::to_string(i);
            if (e[i] > 1) s += "^" + std::to_string(e[i]);
        }
        return s;  // empty for the constant monomial
    }
};

/// Graded lexicographic, X0 > X1 > X2.
inline bool grlex_less(const Monomial& a, const Monomial& b) {
    if (a.total() != b.total()) return a.total() < b.total();
    return a.e < b.e;
}

/// Map comparator putting the graded-lex leading term first.
struct GrlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

}  // namespace sdr
