#include "sdr/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "sdr/errors.hpp"

namespace sdr {

unsigned euler_phi(unsigned m) {
    unsigned result = m;
    unsigned n = m;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            result -= result / d;
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<unsigned> units_mod(unsigned m) {
    if (m == 1) return {1};
    std::vector<unsigned> u;
    for (unsigned k = 1; k < m; ++k)
        if (std::gcd(k, m) == 1) u.push_back(k);
    return u;
}

namespace {

using RPoly = std::vector<Rational>;

void trim(RPoly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

RPoly rpoly_mul(const RPoly& a, const RPoly& b) {
    if (a.empty() || b.empty()) return {};
    RPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

// f = q*g + r with deg r < deg g
std::pair<RPoly, RPoly> rpoly_divmod(RPoly f, const RPoly& g) {
    trim(f);
    RPoly q;
    if (f.size() >= g.size()) q.resize(f.size() - g.size() + 1);
    Rational lead_inv = g.back().inverse();
    while (f.size() >= g.size() && !f.empty()) {
        Rational c = f.back() * lead_inv;
        std::size_t shift = f.size() - g.size();
        q[shift] = c;
        for (std::size_t i = 0; i < g.size(); ++i) f[shift + i] -= c * g[i];
        trim(f);
    }
    return {q, f};
}

}  // namespace

std::vector<Rational> cyclotomic_polynomial(unsigned m) {
    if (m == 0) throw error("cyclotomic conductor must be positive");
    // t^m - 1 divided by Phi_d for all proper divisors d
    RPoly num(m + 1);
    num[0] = Rational(-1);
    num[m] = Rational(1);
    for (unsigned d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        auto [q, r] = rpoly_divmod(num, cyclotomic_polynomial(d));
        if (!r.empty()) throw error("cyclotomic division left a remainder");
        num = q;
    }
    return num;
}

CyclotomicTable::Elem CyclotomicTable::one() const {
    Elem e(phi);
    e[0] = Rational(1);
    return e;
}

CyclotomicTable::Elem CyclotomicTable::generator() const {
    if (phi == 1) return power_mod[1 % m];
    Elem e(phi);
    e[1] = Rational(1);
    return e;
}

CyclotomicTable::Elem CyclotomicTable::from_rational(const Rational& r) const {
    Elem e(phi);
    e[0] = r;
    return e;
}

bool CyclotomicTable::is_zero(const Elem& a) const {
    for (const auto& c : a)
        if (!c.is_zero()) return false;
    return true;
}

bool CyclotomicTable::is_rational(const Elem& a) const {
    for (std::size_t i = 1; i < a.size(); ++i)
        if (!a[i].is_zero()) return false;
    return true;
}

CyclotomicTable::Elem CyclotomicTable::add(const Elem& a, const Elem& b) const {
    Elem r(phi);
    for (unsigned i = 0; i < phi; ++i) r[i] = a[i] + b[i];
    return r;
}

CyclotomicTable::Elem CyclotomicTable::sub(const Elem& a, const Elem& b) const {
    Elem r(phi);
    for (unsigned i = 0; i < phi; ++i) r[i] = a[i] - b[i];
    return r;
}

CyclotomicTable::Elem CyclotomicTable::neg(const Elem& a) const {
    Elem r(phi);
    for (unsigned i = 0; i < phi; ++i) r[i] = -a[i];
    return r;
}

CyclotomicTable::Elem CyclotomicTable::mul(const Elem& a, const Elem& b) const {
    // convolution, then fold overflow powers with the reduction rows
    std::vector<Rational> conv(2 * phi - 1);
    for (unsigned i = 0; i < phi; ++i) {
        if (a[i].is_zero()) continue;
        for (unsigned j = 0; j < phi; ++j)
            if (!b[j].is_zero()) conv[i + j] += a[i] * b[j];
    }
    Elem r(phi);
    for (unsigned i = 0; i < phi; ++i) r[i] = conv[i];
    for (unsigned i = phi; i < 2 * phi - 1; ++i) {
        if (conv[i].is_zero()) continue;
        const auto& row = power_mod[i];  // i < 2*phi-1 <= m guaranteed by table build
        for (unsigned j = 0; j < phi; ++j) r[j] += conv[i] * row[j];
    }
    return r;
}

CyclotomicTable::Elem CyclotomicTable::inv(const Elem& a) const {
    if (is_zero(a)) throw division_by_zero();
    if (is_rational(a)) return from_rational(a[0].inverse());
    // extended Euclid against Phi_m over Q[t]
    RPoly r0 = phi_poly, r1(a.begin(), a.end());
    trim(r1);
    RPoly s0, s1 = {Rational(1)};
    while (!r1.empty()) {
        auto [q, rem] = rpoly_divmod(r0, r1);
        RPoly qs1 = rpoly_mul(q, s1);
        RPoly s2 = s0;
        s2.resize(std::max(s2.size(), qs1.size()));
        for (std::size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1) throw error("element not invertible modulo the cyclotomic polynomial");
    Rational scale = r0[0].inverse();
    Elem out(phi);
    for (std::size_t i = 0; i < s0.size(); ++i) out[i] = s0[i] * scale;
    return out;
}

CyclotomicTable::Elem CyclotomicTable::galois(const Elem& a, unsigned k) const {
    Elem r(phi);
    for (unsigned j = 0; j < phi; ++j) {
        if (a[j].is_zero()) continue;
        const auto& row = power_mod[(std::uint64_t)j * k % m];
        for (unsigned i = 0; i < phi; ++i) r[i] += a[j] * row[i];
    }
    return r;
}

namespace {

CyclotomicTable build_cyclo(unsigned m) {
    CyclotomicTable t;
    t.m = m;
    t.phi = euler_phi(m);
    t.phi_poly = cyclotomic_polynomial(m);
    t.power_mod.resize(std::max(m, 2 * t.phi));
    // t^0..t^{phi-1} are basis vectors; higher powers reduce recursively
    for (unsigned j = 0; j < t.phi; ++j) {
        std::vector<Rational> row(t.phi);
        row[j] = Rational(1);
        t.power_mod[j] = std::move(row);
    }
    for (unsigned j = t.phi; j < t.power_mod.size(); ++j) {
        // t^j = t * t^{j-1}: shift previous row, fold the overflow with
        // t^phi = -(c_0 + c_1 t + ... + c_{phi-1} t^{phi-1})
        const auto& prev = t.power_mod[j - 1];
        std::vector<Rational> row(t.phi);
        for (unsigned i = 0; i + 1 < t.phi; ++i) row[i + 1] = prev[i];
        Rational top = prev[t.phi - 1];
        if (!top.is_zero())
            for (unsigned i = 0; i < t.phi; ++i) row[i] -= top * t.phi_poly[i];
        t.power_mod[j] = std::move(row);
    }
    return t;
}

}  // namespace

const CyclotomicTable& cyclotomic_table(unsigned m) {
    static std::map<unsigned, CyclotomicTable> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, build_cyclo(m)).first;
    return it->second;
}

}  // namespace sdr
