#include "sdr/search.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include "sdr/errors.hpp"

namespace sdr {

FqTable FqTable::build(const FieldContext& ctx) {
    if (!ctx.is_finite()) throw error("search needs a finite field context");
    std::uint64_t q64 = ctx.q();
    if (q64 > 251) throw error("field too large for the table kernels (q > 251)");
    FqTable t;
    t.ctx = ctx;
    t.q = (std::uint32_t)q64;
    std::vector<FieldElement> elems;
    for (std::uint32_t i = 0; i < t.q; ++i) elems.push_back(FieldElement::from_index(ctx, i));
    t.add_t.resize(t.q * t.q);
    t.mul_t.resize(t.q * t.q);
    t.neg_t.resize(t.q);
    t.inv_t.resize(t.q, 0);
    for (std::uint32_t i = 0; i < t.q; ++i) {
        t.neg_t[i] = (std::uint8_t)(-elems[i]).index();
        if (i) t.inv_t[i] = (std::uint8_t)elems[i].inverse().index();
        for (std::uint32_t j = 0; j < t.q; ++j) {
            t.add_t[i * t.q + j] = (std::uint8_t)(elems[i] + elems[j]).index();
            t.mul_t[i * t.q + j] = (std::uint8_t)(elems[i] * elems[j]).index();
        }
    }
    return t;
}

namespace {

// Dense homogeneous forms of degree d over F_q, coefficients indexed by the
// graded-lex descending monomial list.
struct MonoBasis {
    std::vector<std::vector<Monomial>> mons;           // per degree
    std::vector<std::vector<std::array<int, 3>>> mul;  // [d][i][v] -> index in degree d+1

    explicit MonoBasis(unsigned n) {
        mons.resize(n + 1);
        for (unsigned d = 0; d <= n; ++d) {
            for (std::uint32_t e0 = d + 1; e0-- > 0;)
                for (std::uint32_t e1 = d - e0 + 1; e1-- > 0;)
                    mons[d].push_back({{e0, e1, d - e0 - e1}});
            std::sort(mons[d].begin(), mons[d].end(),
                      [](const Monomial& a, const Monomial& b) { return grlex_less(b, a); });
        }
        mul.resize(n);
        for (unsigned d = 0; d + 1 <= n; ++d) {
            std::map<Monomial, int, GrlexDesc> index;
            for (std::size_t i = 0; i < mons[d + 1].size(); ++i) index.emplace(mons[d + 1][i], (int)i);
            mul[d].resize(mons[d].size());
            for (std::size_t i = 0; i < mons[d].size(); ++i)
                for (int v = 0; v < 3; ++v) {
                    Monomial m = mons[d][i];
                    m.e[v] += 1;
                    mul[d][i][v] = index.at(m);
                }
        }
    }
};

struct Kernel {
    const FqTable fq;
    unsigned n;
    unsigned T;  // free entries per matrix
    MonoBasis basis;
    std::vector<std::vector<std::uint8_t>> targets;  // per scalar index a: coeffs of a^{-1} F
    std::vector<std::pair<int, int>> tri;            // upper-triangle coordinates

    Kernel(const TernaryPoly& F, unsigned n_, const FieldContext& ctx)
        : fq(FqTable::build(ctx)), n(n_), T(n_ * (n_ + 1) / 2), basis(n_) {
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i; j < n; ++j) tri.emplace_back((int)i, (int)j);
        // target vectors: coefficients of a^{-1} * F per a in F_q^*
        std::vector<std::uint8_t> fvec(basis.mons[n].size(), 0);
        std::map<Monomial, int, GrlexDesc> index;
        for (std::size_t i = 0; i < basis.mons[n].size(); ++i)
            index.emplace(basis.mons[n][i], (int)i);
        for (const auto& [m, c] : F.terms()) {
            if (m.total() != n) throw error("search target degree mismatch");
            fvec[(std::size_t)index.at(m)] = (std::uint8_t)c.index();
        }
        targets.resize(fq.q);
        for (std::uint32_t a = 1; a < fq.q; ++a) {
            std::uint8_t ainv = fq.inv((std::uint8_t)a);
            auto& t = targets[a];
            t.resize(fvec.size());
            for (std::size_t i = 0; i < fvec.size(); ++i) t[i] = fq.mul(ainv, fvec[i]);
        }
    }

    std::uint64_t candidate_count() const {
        std::uint64_t c = 1;
        for (unsigned i = 0; i < 3 * T; ++i) {
            if (c > (std::uint64_t)1 << 62) throw budget_exceeded(UINT64_MAX, 0);
            c *= fq.q;
        }
        return c;
    }

    // digits (most significant first) -> symmetric matrices as index grids
    void decode(const std::vector<std::uint8_t>& digits,
                std::array<std::vector<std::uint8_t>, 3>& M) const {
        for (int v = 0; v < 3; ++v) {
            M[v].assign(n * n, 0);
            for (unsigned k = 0; k < T; ++k) {
                auto [i, j] = tri[k];
                std::uint8_t e = digits[v * T + k];
                M[v][i * n + j] = e;
                M[v][j * n + i] = e;
            }
        }
    }

    // det(X0 M0 + X1 M1 + X2 M2) as a dense degree-n coefficient vector,
    // Leibniz expansion with table arithmetic (n is tiny).
    void det(const std::array<std::vector<std::uint8_t>, 3>& M,
             std::vector<std::uint8_t>& out) const {
        out.assign(basis.mons[n].size(), 0);
        std::vector<int> perm(n);
        for (unsigned i = 0; i < n; ++i) perm[i] = (int)i;
        std::vector<std::uint8_t> cur, next;
        do {
            // sign of the permutation
            int inversions = 0;
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = i + 1; j < n; ++j)
                    if (perm[i] > perm[j]) ++inversions;
            cur.assign(1, 1);  // the constant 1, degree 0
            bool zero = false;
            for (unsigned i = 0; i < n && !zero; ++i) {
                int col = perm[i];
                std::uint8_t l0 = M[0][i * n + col], l1 = M[1][i * n + col],
                             l2 = M[2][i * n + col];
                if (l0 == 0 && l1 == 0 && l2 == 0) {
                    zero = true;
                    break;
                }
                std::size_t d = i;  // current degree
                next.assign(basis.mons[d + 1].size(), 0);
                const std::uint8_t lv[3] = {l0, l1, l2};
                for (std::size_t m = 0; m < cur.size(); ++m) {
                    std::uint8_t c = cur[m];
                    if (c == 0) continue;
                    for (int v = 0; v < 3; ++v) {
                        if (lv[v] == 0) continue;
                        int idx = basis.mul[d][m][v];
                        next[idx] = fq.add(next[idx], fq.mul(c, lv[v]));
                    }
                }
                cur.swap(next);
            }
            if (!zero) {
                if (inversions % 2 == 0) {
                    for (std::size_t m = 0; m < out.size(); ++m)
                        out[m] = fq.add(out[m], cur[m]);
                } else {
                    for (std::size_t m = 0; m < out.size(); ++m)
                        out[m] = fq.add(out[m], fq.neg(cur[m]));
                }
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    // scan candidates [lo, hi), appending hits in canonical order
    void scan(std::uint64_t lo, std::uint64_t hi, std::vector<FoundPencil>& out) const {
        const unsigned nd = 3 * T;
        std::vector<std::uint8_t> digits(nd, 0);
        std::uint64_t rem = lo;
        for (unsigned d = nd; d-- > 0;) {
            digits[d] = (std::uint8_t)(rem % fq.q);
            rem /= fq.q;
        }
        std::array<std::vector<std::uint8_t>, 3> M;
        std::vector<std::uint8_t> dvec;
        for (std::uint64_t c = lo; c < hi; ++c) {
            decode(digits, M);
            det(M, dvec);
            for (std::uint32_t a = 1; a < fq.q; ++a) {
                if (dvec == targets[a]) out.push_back(FoundPencil{digits, (std::uint8_t)a});
            }
            // odometer increment, least significant digit last
            for (unsigned d = nd; d-- > 0;) {
                if (++digits[d] < fq.q) break;
                digits[d] = 0;
            }
        }
    }
};

}  // namespace

std::vector<FoundPencil> enumerate_range_serial(const TernaryPoly& F, unsigned n,
                                                std::uint64_t lo, std::uint64_t hi) {
    Kernel k(F, n, F.context());
    std::vector<FoundPencil> out;
    k.scan(lo, hi, out);
    return out;
}

std::vector<FoundPencil> enumerate_parallel(const TernaryPoly& F, unsigned n, int workers) {
    Kernel k(F, n, F.context());
    std::uint64_t total = k.candidate_count();
    // fixed chunk grid so the merged order is independent of scheduling
    std::uint64_t chunk = 1 << 14;
    std::uint64_t nchunks = (total + chunk - 1) / chunk;
    if (nchunks > (1u << 20)) {
        chunk = (total + (1u << 20) - 1) / (1u << 20);
        nchunks = (total + chunk - 1) / chunk;
    }
    std::vector<std::vector<FoundPencil>> parts(nchunks);
    int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long long ci = 0; ci < (long long)nchunks; ++ci) {
        std::uint64_t lo = (std::uint64_t)ci * chunk;
        std::uint64_t hi = std::min(total, lo + chunk);
        k.scan(lo, hi, parts[ci]);
    }
    std::vector<FoundPencil> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

SymmetricPencil decode_pencil(const FoundPencil& fp, const FieldContext& ctx, unsigned n) {
    unsigned T = n * (n + 1) / 2;
    if (fp.entries.size() != 3 * T) throw error("pencil encoding has the wrong length");
    std::array<Mat, 3> mats{Mat(ctx, n, n), Mat(ctx, n, n), Mat(ctx, n, n)};
    for (int v = 0; v < 3; ++v) {
        unsigned t = 0;
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i; j < n; ++j) {
                auto e = FieldElement::from_index(ctx, fp.entries[v * T + t]);
                mats[v].at(i, j) = e;
                mats[v].at(j, i) = e;
                ++t;
            }
    }
    return SymmetricPencil(std::move(mats), FieldElement::from_index(ctx, fp.a));
}

namespace {

// P as a q-index grid; returns det index via Leibniz (n tiny).
std::uint8_t grid_det(const FqTable& fq, const std::vector<std::uint8_t>& P, unsigned n) {
    std::vector<int> perm(n);
    for (unsigned i = 0; i < n; ++i) perm[i] = (int)i;
    std::uint8_t acc = 0;
    do {
        int inversions = 0;
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        std::uint8_t prod = 1;
        for (unsigned i = 0; i < n && prod; ++i) prod = fq.mul(prod, P[i * n + perm[i]]);
        acc = fq.add(acc, inversions % 2 ? fq.neg(prod) : prod);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

struct Transform {
    std::vector<std::uint8_t> P;  // n*n
    std::uint8_t c;               // scalar move
    std::uint8_t a_factor;        // c^{-n} * det(P)^{-2}
};

}  // namespace

EquivalenceClasses classify_equivalence(const std::vector<FoundPencil>& found,
                                        const FieldContext& ctx, unsigned n) {
    EquivalenceClasses out;
    out.class_of.assign(found.size(), SIZE_MAX);
    if (found.empty()) return out;
    FqTable fq = FqTable::build(ctx);
    unsigned T = n * (n + 1) / 2;

    std::map<FoundPencil, std::size_t> index;
    for (std::size_t i = 0; i < found.size(); ++i) index.emplace(found[i], i);

    // multiplicative generator of F_q^*
    std::uint8_t gen = 1;
    for (std::uint32_t g = 1; g < fq.q; ++g) {
        std::uint8_t x = (std::uint8_t)g;
        unsigned ord = 1;
        while (x != 1) {
            x = fq.mul(x, (std::uint8_t)g);
            ++ord;
        }
        if (ord == fq.q - 1) {
            gen = (std::uint8_t)g;
            break;
        }
    }

    std::vector<Transform> gens;
    auto push = [&](std::vector<std::uint8_t> P, std::uint8_t c) {
        std::uint8_t dp = grid_det(fq, P, n);
        std::uint8_t fac = fq.inv(fq.mul(dp, dp));
        std::uint8_t cn = 1;
        for (unsigned i = 0; i < n; ++i) cn = fq.mul(cn, c);
        fac = fq.mul(fac, fq.inv(cn));
        gens.push_back({std::move(P), c, fac});
    };
    std::vector<std::uint8_t> I(n * n, 0);
    for (unsigned i = 0; i < n; ++i) I[i * n + i] = 1;
    // transvections I + e_ij
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            if (i == j) continue;
            auto P = I;
            P[i * n + j] = 1;
            push(std::move(P), 1);
        }
    // diagonal unit and the scalar move
    if (fq.q > 2) {
        auto P = I;
        P[0] = gen;
        push(std::move(P), 1);
        push(I, gen);
    }

    auto apply = [&](const FoundPencil& fp, const Transform& t) {
        // M -> c * P^T M P on each matrix, entries re-encoded
        FoundPencil img;
        img.entries.resize(3 * T);
        img.a = fq.mul(fp.a, t.a_factor);
        std::vector<std::uint8_t> M(n * n), W(n * n);
        for (int v = 0; v < 3; ++v) {
            unsigned k = 0;
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = i; j < n; ++j) {
                    std::uint8_t e = fp.entries[v * T + k];
                    M[i * n + j] = e;
                    M[j * n + i] = e;
                    ++k;
                }
            // W = M P
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = 0; j < n; ++j) {
                    std::uint8_t acc = 0;
                    for (unsigned l = 0; l < n; ++l)
                        acc = fq.add(acc, fq.mul(M[i * n + l], t.P[l * n + j]));
                    W[i * n + j] = acc;
                }
            // upper triangle of c * P^T W
            k = 0;
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = i; j < n; ++j) {
                    std::uint8_t acc = 0;
                    for (unsigned l = 0; l < n; ++l)
                        acc = fq.add(acc, fq.mul(t.P[l * n + i], W[l * n + j]));
                    img.entries[v * T + k] = fq.mul(t.c, acc);
                    ++k;
                }
        }
        return img;
    };

    std::size_t cls = 0;
    for (std::size_t i = 0; i < found.size(); ++i) {
        if (out.class_of[i] != SIZE_MAX) continue;
        out.representatives.push_back(i);
        std::vector<std::size_t> stack{i};
        out.class_of[i] = cls;
        while (!stack.empty()) {
            std::size_t cur = stack.back();
            stack.pop_back();
            for (const auto& t : gens) {
                FoundPencil img = apply(found[cur], t);
                auto it = index.find(img);
                if (it == index.end())
                    throw error("found set is not closed under congruence; enumeration bug");
                if (out.class_of[it->second] == SIZE_MAX) {
                    out.class_of[it->second] = cls;
                    stack.push_back(it->second);
                }
            }
        }
        ++cls;
    }
    out.count = cls;
    return out;
}

namespace {

SearchReport run_search(const TernaryPoly& F, unsigned n, const SearchOptions& options,
                        bool parallel) {
    auto deg = F.homogeneous_degree();
    if (!deg || *deg != n) throw error("search target must be homogeneous of degree n");
    if (!F.context().is_finite()) throw error("search needs a finite field context");
    auto t0 = std::chrono::steady_clock::now();

    SearchReport rep;
    rep.field = F.context();
    rep.curve = F.str();
    rep.n = n;
    {
        Kernel probe(F, n, F.context());
        rep.candidates = probe.candidate_count();
    }
    if (rep.candidates > options.budget) throw budget_exceeded(rep.candidates, options.budget);
    rep.total = rep.candidates * (std::uint64_t)(F.context().q() - 1);

    rep.found = parallel ? enumerate_parallel(F, n, options.workers)
                         : enumerate_range_serial(F, n, 0, rep.candidates);
    if (options.classify)
        rep.classes = classify_equivalence(rep.found, F.context(), n);

    rep.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                     .count();
    return rep;
}

}  // namespace

SearchReport enumerate_representations(const TernaryPoly& F, unsigned n,
                                       const SearchOptions& options) {
    return run_search(F, n, options, true);
}

SearchReport enumerate_representations_serial(const TernaryPoly& F, unsigned n,
                                              const SearchOptions& options) {
    return run_search(F, n, options, false);
}

std::string SearchReport::summary() const {
    std::ostringstream out;
    out << "search-report:\n";
    out << "  field: " << field.str() << "\n";
    out << "  curve: " << curve << "\n";
    out << "  n: " << n << "\n";
    out << "  candidates: " << candidates << "\n";
    out << "  pencils-tested: " << total << "\n";
    out << "  found: " << found.size() << "\n";
    out << "  classes: " << classes.count << "\n";
    for (std::size_t r : classes.representatives) {
        const auto& fp = found[r];
        out << "  representative:";
        out << " a=" << (unsigned)fp.a << " entries=";
        for (std::size_t i = 0; i < fp.entries.size(); ++i) {
            if (i) out << ",";
            out << (unsigned)fp.entries[i];
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace sdr
