#include "sdr/finite_field.hpp"

#include <map>
#include <mutex>

#include "sdr/errors.hpp"

namespace sdr {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; (std::uint64_t)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t FiniteFieldTable::q() const {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < k; ++i) r *= p;
    return r;
}

FiniteFieldTable::Elem FiniteFieldTable::one() const {
    Elem e(k, 0);
    e[0] = 1 % p;
    return e;
}

FiniteFieldTable::Elem FiniteFieldTable::from_integer(long long n) const {
    long long r = n % (long long)p;
    if (r < 0) r += p;
    Elem e(k, 0);
    e[0] = (std::uint32_t)r;
    return e;
}

bool FiniteFieldTable::is_zero(const Elem& a) const {
    for (auto c : a)
        if (c != 0) return false;
    return true;
}

FiniteFieldTable::Elem FiniteFieldTable::add(const Elem& a, const Elem& b) const {
    Elem r(k);
    for (std::uint32_t i = 0; i < k; ++i) r[i] = (a[i] + b[i]) % p;
    return r;
}

FiniteFieldTable::Elem FiniteFieldTable::sub(const Elem& a, const Elem& b) const {
    Elem r(k);
    for (std::uint32_t i = 0; i < k; ++i) r[i] = (a[i] + p - b[i]) % p;
    return r;
}

FiniteFieldTable::Elem FiniteFieldTable::neg(const Elem& a) const {
    Elem r(k);
    for (std::uint32_t i = 0; i < k; ++i) r[i] = (p - a[i]) % p;
    return r;
}

namespace {

// Dense univariate arithmetic over F_p on raw coefficient vectors,
// used both for element reduction and for the irreducibility search.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (std::uint32_t)((r[i + j] + (std::uint64_t)a[i] * b[j]) % p);
    }
    return r;
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
    // extended Euclid on machine ints
    long long t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        long long qq = r / nr;
        long long tmp = t - qq * nt;
        t = nt; nt = tmp;
        tmp = r - qq * nr;
        r = nr; nr = tmp;
    }
    if (r != 1) throw division_by_zero();
    if (t < 0) t += p;
    return (std::uint32_t)t;
}

// Remainder of f modulo monic g (g given by low coefficients, implicit leading 1).
Poly poly_mod_monic(Poly f, const Poly& g_low, std::uint32_t p) {
    std::size_t k = g_low.size();
    trim(f);
    while (f.size() > k) {
        std::uint32_t lead = f.back();
        std::size_t shift = f.size() - 1 - k;
        if (lead != 0) {
            for (std::size_t i = 0; i < k; ++i) {
                std::uint64_t sub = (std::uint64_t)lead * g_low[i] % p;
                f[shift + i] = (std::uint32_t)((f[shift + i] + p - sub) % p);
            }
        }
        f.pop_back();
        trim(f);
    }
    return f;
}

Poly poly_powmod_u64(Poly base, std::uint64_t e, const Poly& mod_low, std::uint32_t p) {
    Poly r = {1};
    base = poly_mod_monic(std::move(base), mod_low, p);
    while (e > 0) {
        if (e & 1) r = poly_mod_monic(poly_mul(r, base, p), mod_low, p);
        base = poly_mod_monic(poly_mul(base, base, p), mod_low, p);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // reduce a mod b (b not necessarily monic)
        std::uint32_t li = inv_mod_p(b.back(), p);
        Poly r = a;
        trim(r);
        while (r.size() >= b.size() && !r.empty()) {
            std::uint32_t c = (std::uint32_t)((std::uint64_t)r.back() * li % p);
            std::size_t shift = r.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) {
                std::uint64_t sub = (std::uint64_t)c * b[i] % p;
                r[shift + i] = (std::uint32_t)((r[shift + i] + p - sub) % p);
            }
            trim(r);
        }
        a = b;
        b = r;
    }
    return a;
}

// Rabin test: t^{p^k} == t (mod f) and gcd(t^{p^{k/r}} - t, f) = 1 for prime r | k.
bool is_irreducible(const Poly& f_low, std::uint32_t p, std::uint32_t k) {
    if (k == 1) return true;
    auto x_pow_q = [&](std::uint32_t deg) {
        // t^{p^deg} mod f via repeated exponentiation by p
        Poly t = {0, 1};
        for (std::uint32_t i = 0; i < deg; ++i) t = poly_powmod_u64(t, p, f_low, p);
        return t;
    };
    Poly top = x_pow_q(k);
    // top must equal t
    Poly x = {0, 1};
    Poly diff = top;
    diff.resize(std::max(diff.size(), x.size()), 0);
    for (std::size_t i = 0; i < x.size(); ++i) diff[i] = (diff[i] + p - x[i]) % p;
    trim(diff);
    if (!diff.empty()) return false;
    for (std::uint32_t r = 2; r <= k; ++r) {
        if (k % r != 0 || !is_prime_u32(r)) continue;
        Poly mid = x_pow_q(k / r);
        Poly d = mid;
        d.resize(std::max(d.size(), x.size()), 0);
        for (std::size_t i = 0; i < x.size(); ++i) d[i] = (d[i] + p - x[i]) % p;
        trim(d);
        Poly full = f_low;
        full.push_back(1);
        Poly g = poly_gcd(full, d, p);
        if (g.size() != 1) return false;
    }
    return true;
}

FiniteFieldTable build_table(std::uint32_t p, std::uint32_t k) {
    if (!is_prime_u32(p)) throw error("finite field characteristic " + std::to_string(p) + " is not prime");
    if (k == 0) throw error("finite field extension degree must be positive");
    FiniteFieldTable t;
    t.p = p;
    t.k = k;
    if (k > 1) {
        // Least monic irreducible: scan low-coefficient vectors as base-p
        // integers (c_0 least significant), first irreducible wins.
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < k; ++i) count *= p;
        for (std::uint64_t n = 0; n < count; ++n) {
            Poly low(k);
            std::uint64_t v = n;
            for (std::uint32_t i = 0; i < k; ++i) {
                low[i] = (std::uint32_t)(v % p);
                v /= p;
            }
            if (low[0] == 0) continue;  // t | f, reducible
            if (is_irreducible(low, p, k)) {
                t.modulus = low;
                break;
            }
        }
        if (t.modulus.empty()) throw error("no irreducible modulus found");  // unreachable
    }
    return t;
}

}  // namespace

FiniteFieldTable::Elem FiniteFieldTable::mul(const Elem& a, const Elem& b) const {
    if (k == 1) return {(std::uint32_t)((std::uint64_t)a[0] * b[0] % p)};
    Poly r = poly_mod_monic(poly_mul(a, b, p), modulus, p);
    r.resize(k, 0);
    return r;
}

FiniteFieldTable::Elem FiniteFieldTable::inv(const Elem& a) const {
    if (is_zero(a)) throw division_by_zero();
    if (k == 1) return {inv_mod_p(a[0], p)};
    // extended Euclid against the modulus in F_p[t]
    Poly full = modulus;
    full.push_back(1);
    Poly r0 = full, r1 = a;
    trim(r1);
    Poly s0 = {}, s1 = {1};  // bezout coefficients for a
    while (!r1.empty()) {
        // divide r0 by r1
        Poly q;
        Poly rem = r0;
        trim(rem);
        std::uint32_t li = inv_mod_p(r1.back(), p);
        if (rem.size() >= r1.size()) q.resize(rem.size() - r1.size() + 1, 0);
        while (rem.size() >= r1.size() && !rem.empty()) {
            std::uint32_t c = (std::uint32_t)((std::uint64_t)rem.back() * li % p);
            std::size_t shift = rem.size() - r1.size();
            q[shift] = c;
            for (std::size_t i = 0; i < r1.size(); ++i) {
                std::uint64_t sub = (std::uint64_t)c * r1[i] % p;
                rem[shift + i] = (std::uint32_t)((rem[shift + i] + p - sub) % p);
            }
            trim(rem);
        }
        Poly qs1 = poly_mul(q, s1, p);
        Poly s2 = s0;
        s2.resize(std::max(s2.size(), qs1.size()), 0);
        for (std::size_t i = 0; i < qs1.size(); ++i) s2[i] = (s2[i] + p - qs1[i]) % p;
        trim(s2);
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    // r0 = gcd (a nonzero constant since modulus is irreducible)
    if (r0.size() != 1) throw division_by_zero();
    std::uint32_t scale = inv_mod_p(r0[0], p);
    Elem out(k, 0);
    for (std::size_t i = 0; i < s0.size() && i < k; ++i)
        out[i] = (std::uint32_t)((std::uint64_t)s0[i] * scale % p);
    return out;
}

std::uint64_t FiniteFieldTable::index_of(const Elem& a) const {
    std::uint64_t idx = 0;
    for (std::uint32_t i = k; i-- > 0;) idx = idx * p + a[i];
    return idx;
}

FiniteFieldTable::Elem FiniteFieldTable::from_index(std::uint64_t i) const {
    Elem e(k);
    for (std::uint32_t j = 0; j < k; ++j) {
        e[j] = (std::uint32_t)(i % p);
        i /= p;
    }
    return e;
}

std::string FiniteFieldTable::str(const Elem& a) const {
    if (k == 1) return std::to_string(a[0]);
    // internal debugging form for extension fields
    std::string s = "[";
    for (std::uint32_t i = 0; i < k; ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s + "]";
}

const FiniteFieldTable& finite_field(std::uint32_t p, std::uint32_t k) {
    static std::map<std::pair<std::uint32_t, std::uint32_t>, FiniteFieldTable> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, k);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_table(p, k)).first;
    return it->second;
}

}  // namespace sdr
