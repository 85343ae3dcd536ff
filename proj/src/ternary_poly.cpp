#include "sdr/ternary_poly.hpp"

#include "sdr/errors.hpp"

namespace sdr {

TernaryPoly TernaryPoly::constant(const FieldElement& c) {
    TernaryPoly f(c.context());
    f.add_term(Monomial{}, c);
    return f;
}

TernaryPoly TernaryPoly::variable(const FieldContext& ctx, int i, std::uint32_t power) {
    TernaryPoly f(ctx);
    Monomial m;
    m.e[i] = power;
    f.add_term(m, FieldElement::one(ctx));
    return f;
}

TernaryPoly TernaryPoly::term(const FieldElement& c, const Monomial& m) {
    TernaryPoly f(c.context());
    f.add_term(m, c);
    return f;
}

std::uint32_t TernaryPoly::degree() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total());
    return d;
}

std::optional<std::uint32_t> TernaryPoly::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    std::uint32_t d = terms_.begin()->first.total();
    for (const auto& [m, c] : terms_)
        if (m.total() != d) return std::nullopt;
    return d;
}

void TernaryPoly::add_term(const Monomial& m, const FieldElement& c) {
    if (c.context() != ctx_) throw context_mismatch("coefficient context mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TernaryPoly TernaryPoly::operator-() const {
    TernaryPoly r(ctx_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

TernaryPoly TernaryPoly::operator+(const TernaryPoly& o) const {
    if (ctx_ != o.ctx_) throw context_mismatch("polynomial context mismatch");
    TernaryPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

TernaryPoly TernaryPoly::operator-(const TernaryPoly& o) const {
    if (ctx_ != o.ctx_) throw context_mismatch("polynomial context mismatch");
    TernaryPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

TernaryPoly TernaryPoly::operator*(const TernaryPoly& o) const {
    if (ctx_ != o.ctx_) throw context_mismatch("polynomial context mismatch");
    TernaryPoly r(ctx_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

TernaryPoly TernaryPoly::operator*(const FieldElement& c) const {
    if (c.context() != ctx_) throw context_mismatch("scalar context mismatch");
    TernaryPoly r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [m, x] : terms_) r.add_term(m, x * c);
    return r;
}

TernaryPoly TernaryPoly::pow(std::uint32_t k) const {
    TernaryPoly r = constant(FieldElement::one(ctx_));
    TernaryPoly b = *this;
    while (k > 0) {
        if (k & 1) r = r * b;
        if (k >>= 1) b = b * b;
    }
    return r;
}

FieldElement TernaryPoly::evaluate(const std::array<FieldElement, 3>& x) const {
    FieldElement acc = FieldElement::zero(ctx_);
    for (const auto& [m, c] : terms_) {
        FieldElement t = c;
        for (int i = 0; i < 3; ++i)
            if (m.e[i] > 0) t *= x[i].pow(m.e[i]);
        acc += t;
    }
    return acc;
}

TernaryPoly TernaryPoly::substitute_linear(
    const std::array<std::array<FieldElement, 3>, 3>& T) const {
    std::array<TernaryPoly, 3> image{TernaryPoly(ctx_), TernaryPoly(ctx_), TernaryPoly(ctx_)};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Monomial m;
            m.e[j] = 1;
            image[i].add_term(m, T[i][j]);
        }
    TernaryPoly r(ctx_);
    for (const auto& [m, c] : terms_) {
        TernaryPoly t = constant(c);
        for (int i = 0; i < 3; ++i)
            for (std::uint32_t k = 0; k < m.e[i]; ++k) t = t * image[i];
        r = r + t;
    }
    return r;
}

TernaryPoly TernaryPoly::derivative(int i) const {
    TernaryPoly r(ctx_);
    for (const auto& [m, c] : terms_) {
        if (m.e[i] == 0) continue;
        Monomial d = m;
        d.e[i] -= 1;
        r.add_term(d, c.times_integer((long)m.e[i]));
    }
    return r;
}

std::optional<TernaryPoly> TernaryPoly::exact_divide(const TernaryPoly& g) const {
    if (ctx_ != g.ctx_) throw context_mismatch("polynomial context mismatch");
    if (g.is_zero()) throw division_by_zero();
    TernaryPoly q(ctx_);
    TernaryPoly rem = *this;
    const auto& [gm, gc] = *g.terms_.begin();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = *rem.terms_.begin();
        if (!gm.divides(rm)) return std::nullopt;
        FieldElement c = rc / gc;
        Monomial m = rm / gm;
        q.add_term(m, c);
        rem = rem - g * TernaryPoly::term(c, m);
    }
    return q;
}

TernaryPoly TernaryPoly::embedded(const FieldContext& target) const {
    if (target == ctx_) return *this;
    TernaryPoly r(target);
    for (const auto& [m, c] : terms_) r.add_term(m, c.embed(target));
    return r;
}

std::string TernaryPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string mono = m.str();
        std::string piece;
        bool neg = false;
        if (c.needs_parens_in_product()) {
            piece = "(" + c.str() + ")";
            if (!mono.empty()) piece += "*" + mono;
        } else {
            // pull the sign out for rational or single-term coefficients
            std::string cs = c.str();
            if (!cs.empty() && cs[0] == '-') {
                neg = true;
                cs = cs.substr(1);
            }
            if (mono.empty()) {
                piece = cs;
            } else if (cs == "1") {
                piece = mono;
            } else {
                piece = cs + "*" + mono;
            }
        }
        if (first) {
            out += (neg ? "-" : "") + piece;
            first = false;
        } else {
            out += (neg ? "-" : "+") + piece;
        }
    }
    return out;
}

BinaryForm BinaryForm::zero(const FieldContext& c, std::uint32_t d) {
    BinaryForm f;
    f.ctx = c;
    f.formal_degree = d;
    f.coeff.assign(d + 1, FieldElement::zero(c));
    return f;
}

bool BinaryForm::is_zero() const {
    for (const auto& c : coeff)
        if (!c.is_zero()) return false;
    return true;
}

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
    if (ctx != o.ctx) throw context_mismatch("binary form context mismatch");
    BinaryForm r = zero(ctx, formal_degree + o.formal_degree);
    for (std::size_t i = 0; i < coeff.size(); ++i) {
        if (coeff[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeff.size(); ++j) r.coeff[i + j] += coeff[i] * o.coeff[j];
    }
    return r;
}

BinaryForm BinaryForm::operator*(const FieldElement& c) const {
    BinaryForm r = *this;
    for (auto& x : r.coeff) x *= c;
    return r;
}

FieldElement BinaryForm::evaluate(const FieldElement& u, const FieldElement& v) const {
    FieldElement acc = FieldElement::zero(ctx);
    for (std::uint32_t i = 0; i <= formal_degree; ++i) {
        if (coeff[i].is_zero()) continue;
        acc += coeff[i] * u.pow(formal_degree - i) * v.pow(i);
    }
    return acc;
}

std::string BinaryForm::str() const {
    std::string out;
    bool first = true;
    for (std::uint32_t i = 0; i <= formal_degree; ++i) {
        const auto& c = coeff[i];
        if (c.is_zero()) continue;
        std::string mono;
        std::uint32_t eu = formal_degree - i, ev = i;
        if (eu) {
            mono += "u";
            if (eu > 1) mono += "^" + std::to_string(eu);
        }
        if (ev) {
            if (!mono.empty()) mono += "*";
            mono += "v";
            if (ev > 1) mono += "^" + std::to_string(ev);
        }
        std::string piece;
        bool neg = false;
        if (c.needs_parens_in_product()) {
            piece = "(" + c.str() + ")" + (mono.empty() ? "" : "*" + mono);
        } else {
            std::string cs = c.str();
            if (!cs.empty() && cs[0] == '-') {
                neg = true;
                cs = cs.substr(1);
            }
            piece = mono.empty() ? cs : (cs == "1" ? mono : cs + "*" + mono);
        }
        if (first) {
            out += (neg ? "-" : "") + piece;
            first = false;
        } else {
            out += (neg ? "-" : "+") + piece;
        }
    }
    return first ? "0" : out;
}

std::array<FieldElement, 3> LineParametrization::point_at(const FieldElement& u,
                                                          const FieldElement& v) const {
    std::array<FieldElement, 3> x{FieldElement::zero(u.context()),
                                  FieldElement::zero(u.context()),
                                  FieldElement::zero(u.context())};
    for (int i = 0; i < 3; ++i) x[i] = B[i][0] * u + B[i][1] * v;
    return x;
}

LineParametrization parametrize_line(const FieldContext& ctx,
                                     const std::array<FieldElement, 3>& L) {
    int solved = -1;
    for (int i = 2; i >= 0; --i)
        if (!L[i].is_zero()) {
            solved = i;
            break;
        }
    if (solved < 0) throw degenerate_input("zero line");
    LineParametrization par;
    par.L = L;
    par.solved = solved;
    int np = 0;
    for (int i = 0; i < 3; ++i)
        if (i != solved) par.params[np++] = i;
    auto z = FieldElement::zero(ctx);
    for (int i = 0; i < 3; ++i) par.B[i] = {z, z};
    // free variables carry u and v; solved = -(L[p0] u + L[p1] v)/L[solved]
    par.B[par.params[0]][0] = FieldElement::one(ctx);
    par.B[par.params[1]][1] = FieldElement::one(ctx);
    FieldElement inv = L[solved].inverse();
    par.B[solved][0] = -(L[par.params[0]] * inv);
    par.B[solved][1] = -(L[par.params[1]] * inv);
    return par;
}

BinaryForm restrict_to_line(const TernaryPoly& f, const std::array<FieldElement, 3>& L) {
    auto deg = f.homogeneous_degree();
    if (!deg) throw error("restriction needs a homogeneous polynomial");
    auto par = parametrize_line(f.context(), L);
    const FieldContext& ctx = f.context();
    // substitute X_i = B[i][0] u + B[i][1] v, expanding binomially
    BinaryForm out = BinaryForm::zero(ctx, *deg);
    for (const auto& [m, c] : f.terms()) {
        BinaryForm t = BinaryForm::zero(ctx, 0);
        t.coeff[0] = c;
        for (int i = 0; i < 3; ++i) {
            BinaryForm lin = BinaryForm::zero(ctx, 1);
            lin.coeff[0] = par.B[i][0];
            lin.coeff[1] = par.B[i][1];
            for (std::uint32_t k = 0; k < m.e[i]; ++k) t = t * lin;
        }
        for (std::size_t i = 0; i < t.coeff.size(); ++i) out.coeff[i] += t.coeff[i];
    }
    return out;
}

}  // namespace sdr
