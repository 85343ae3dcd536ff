#include "sdr/resultant.hpp"

#include <algorithm>
#include <random>

#include "sdr/errors.hpp"
#include "sdr/matrix.hpp"

namespace sdr {

namespace {

std::vector<Monomial> monomials_of_degree(std::uint32_t d) {
    std::vector<Monomial> out;
    for (std::uint32_t e0 = 0; e0 <= d; ++e0)
        for (std::uint32_t e1 = 0; e1 + e0 <= d; ++e1) out.push_back({{e0, e1, d - e0 - e1}});
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        return grlex_less(b, a);
    });
    return out;
}

// det(Macaulay)/det(minor); nullopt when the minor vanishes.
std::optional<FieldElement> macaulay_quotient(const TernaryPoly& f, const TernaryPoly& g,
                                              const TernaryPoly& h,
                                              const std::array<std::uint32_t, 3>& deg) {
    const FieldContext& ctx = f.context();
    const std::uint32_t D = deg[0] + deg[1] + deg[2] - 2;
    std::vector<Monomial> mons = monomials_of_degree(D);
    const std::size_t N = mons.size();
    std::map<Monomial, std::size_t, GrlexDesc> col;
    for (std::size_t i = 0; i < N; ++i) col.emplace(mons[i], i);

    const TernaryPoly* forms[3] = {&f, &g, &h};
    auto class_of = [&](const Monomial& m) -> int {
        if (m.e[0] >= deg[0]) return 0;
        if (m.e[1] >= deg[1]) return 1;
        return 2;  // m.e[2] >= deg[2] by degree count
    };
    auto reduced = [&](const Monomial& m) {
        int hits = 0;
        for (int i = 0; i < 3; ++i)
            if (m.e[i] >= deg[i]) ++hits;
        return hits == 1;
    };

    Mat M(ctx, N, N);
    for (std::size_t r = 0; r < N; ++r) {
        int cls = class_of(mons[r]);
        Monomial quot = mons[r];
        quot.e[cls] -= deg[cls];
        for (const auto& [m, c] : forms[cls]->terms()) M.at(r, col.at(quot * m)) = c;
    }

    std::vector<std::size_t> minor_idx;
    for (std::size_t i = 0; i < N; ++i)
        if (!reduced(mons[i])) minor_idx.push_back(i);

    FieldElement minor_det = FieldElement::one(ctx);
    if (!minor_idx.empty()) {
        Mat Mp(ctx, minor_idx.size(), minor_idx.size());
        for (std::size_t i = 0; i < minor_idx.size(); ++i)
            for (std::size_t j = 0; j < minor_idx.size(); ++j)
                Mp.at(i, j) = M.at(minor_idx[i], minor_idx[j]);
        minor_det = Mp.det();
        if (minor_det.is_zero()) return std::nullopt;
    }
    return M.det() / minor_det;
}

}  // namespace

FieldElement macaulay_resultant(const TernaryPoly& f, const TernaryPoly& g,
                                const TernaryPoly& h) {
    const FieldContext& ctx = f.context();
    if (g.context() != ctx || h.context() != ctx)
        throw context_mismatch("resultant operands in different contexts");
    std::array<std::uint32_t, 3> deg{};
    const TernaryPoly* forms[3] = {&f, &g, &h};
    for (int i = 0; i < 3; ++i) {
        auto d = forms[i]->homogeneous_degree();
        if (!d || *d == 0) throw error("resultant needs homogeneous forms of positive degree");
        deg[i] = *d;
    }

    if (auto r = macaulay_quotient(f, g, h, deg)) return *r;

    // The distinguished minor vanished: move to generic coordinates and
    // undo the det(T)^(d0*d1*d2) factor afterwards.
    std::uint64_t e = (std::uint64_t)deg[0] * deg[1] * deg[2];
    for (int attempt = 0; attempt < 8; ++attempt) {
        std::mt19937 rng(0x5eed0 + (unsigned)attempt);
        std::uniform_int_distribution<int> coef(-3, 3);
        std::array<std::array<FieldElement, 3>, 3> T;
        Mat Tm(ctx, 3, 3);
        FieldElement dt = FieldElement::zero(ctx);
        for (int tries = 0; tries < 64 && dt.is_zero(); ++tries) {
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    T[i][j] = FieldElement::integer(ctx, coef(rng));
                    Tm.at(i, j) = T[i][j];
                }
            dt = Tm.det();
        }
        if (dt.is_zero()) continue;
        auto r = macaulay_quotient(f.substitute_linear(T), g.substitute_linear(T),
                                   h.substitute_linear(T), deg);
        if (r) return *r / dt.pow((long)e);
    }
    throw resultant_indeterminate("distinguished minor vanished in all coordinate changes");
}

}  // namespace sdr
