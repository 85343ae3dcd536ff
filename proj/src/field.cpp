#include "sdr/field.hpp"

#include <algorithm>
#include <numeric>

#include "sdr/errors.hpp"

namespace sdr {

FieldContext FieldContext::cyclo(unsigned m) {
    if (m == 0) throw error("conductor must be positive");
    FieldContext c;
    c.kind = Kind::cyclotomic;
    c.conductor = m;
    return c;
}

FieldContext FieldContext::finite(std::uint32_t p, std::uint32_t k) {
    finite_field(p, k);  // validates p prime, k >= 1
    FieldContext c;
    c.kind = Kind::finite;
    c.p = p;
    c.k = k;
    return c;
}

std::uint64_t FieldContext::q() const {
    if (!is_finite()) throw error("q() on a characteristic-zero context");
    return finite_field(p, k).q();
}

unsigned FieldContext::characteristic() const { return is_finite() ? p : 0; }

std::string FieldContext::str() const {
    switch (kind) {
        case Kind::rational: return "Q";
        case Kind::cyclotomic: return "Q(z" + std::to_string(conductor) + ")";
        case Kind::finite: return "F" + std::to_string(q());
    }
    return "?";
}

FieldContext FieldContext::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace((unsigned char)c)) s += c;
    if (s == "Q") return Q();
    if (s.rfind("Q(z", 0) == 0 && s.back() == ')') {
        unsigned m = (unsigned)std::stoul(s.substr(3, s.size() - 4));
        return cyclo(m);
    }
    if (!s.empty() && s[0] == 'F') {
        std::uint64_t q = std::stoull(s.substr(1));
        if (q < 2) throw error("field size must be at least 2");
        // factor q = p^k
        std::uint64_t p = q;
        for (std::uint64_t d = 2; d * d <= q; ++d) {
            if (q % d == 0) {
                p = d;
                break;
            }
        }
        std::uint32_t k = 0;
        std::uint64_t t = q;
        while (t > 1) {
            if (t % p != 0) throw error("field size " + std::to_string(q) + " is not a prime power");
            t /= p;
            ++k;
        }
        return finite((std::uint32_t)p, k);
    }
    throw error("unrecognized field header '" + text + "'");
}

std::optional<FieldContext> unify(const FieldContext& a, const FieldContext& b) {
    if (a == b) return a;
    if (a.is_rational() && b.is_cyclotomic()) return b;
    if (b.is_rational() && a.is_cyclotomic()) return a;
    if (a.is_cyclotomic() && b.is_cyclotomic())
        return FieldContext::cyclo(std::lcm(a.conductor, b.conductor));
    if (a.is_finite() && b.is_finite() && a.p == b.p) {
        if (a.k == 1) return b;
        if (b.k == 1) return a;
    }
    return std::nullopt;
}

FieldElement FieldElement::zero(const FieldContext& ctx) {
    switch (ctx.kind) {
        case FieldContext::Kind::rational: return {ctx, Rational(0)};
        case FieldContext::Kind::cyclotomic: return {ctx, cyclotomic_table(ctx.conductor).zero()};
        case FieldContext::Kind::finite: return {ctx, finite_field(ctx.p, ctx.k).zero()};
    }
    throw error("bad context");
}

FieldElement FieldElement::one(const FieldContext& ctx) {
    switch (ctx.kind) {
        case FieldContext::Kind::rational: return {ctx, Rational(1)};
        case FieldContext::Kind::cyclotomic: return {ctx, cyclotomic_table(ctx.conductor).one()};
        case FieldContext::Kind::finite: return {ctx, finite_field(ctx.p, ctx.k).one()};
    }
    throw error("bad context");
}

FieldElement FieldElement::integer(const FieldContext& ctx, long n) {
    switch (ctx.kind) {
        case FieldContext::Kind::rational: return {ctx, Rational(n)};
        case FieldContext::Kind::cyclotomic:
            return {ctx, cyclotomic_table(ctx.conductor).from_rational(Rational(n))};
        case FieldContext::Kind::finite: return {ctx, finite_field(ctx.p, ctx.k).from_integer(n)};
    }
    throw error("bad context");
}

FieldElement FieldElement::from_rational(const FieldContext& ctx, const Rational& r) {
    switch (ctx.kind) {
        case FieldContext::Kind::rational: return {ctx, r};
        case FieldContext::Kind::cyclotomic:
            return {ctx, cyclotomic_table(ctx.conductor).from_rational(r)};
        case FieldContext::Kind::finite: {
            const auto& t = finite_field(ctx.p, ctx.k);
            mpz_class num = r.numerator(), den = r.denominator();
            mpz_class pz(ctx.p);
            if (mpz_divisible_p(den.get_mpz_t(), pz.get_mpz_t()))
                throw division_by_zero();
            mpz_class nr = num % pz, dr = den % pz;
            long n = nr.get_si(), d = dr.get_si();
            auto e = t.mul(t.from_integer(n), t.inv(t.from_integer(d)));
            return {ctx, e};
        }
    }
    throw error("bad context");
}

FieldElement FieldElement::zeta(unsigned m) {
    FieldContext ctx = FieldContext::cyclo(m);
    return {ctx, cyclotomic_table(m).generator()};
}

FieldElement FieldElement::from_index(const FieldContext& ctx, std::uint64_t idx) {
    if (!ctx.is_finite()) throw error("from_index needs a finite context");
    return {ctx, finite_field(ctx.p, ctx.k).from_index(idx)};
}

bool FieldElement::is_zero() const {
    switch (ctx_.kind) {
        case FieldContext::Kind::rational: return std::get<Rational>(v_).is_zero();
        case FieldContext::Kind::cyclotomic: return cyclo().is_zero(std::get<CVec>(v_));
        case FieldContext::Kind::finite: return ff().is_zero(std::get<FVec>(v_));
    }
    return false;
}

bool FieldElement::is_one() const { return *this == one(ctx_); }

bool FieldElement::is_rational_valued() const {
    switch (ctx_.kind) {
        case FieldContext::Kind::rational: return true;
        case FieldContext::Kind::cyclotomic: return cyclo().is_rational(std::get<CVec>(v_));
        case FieldContext::Kind::finite: return false;
    }
    return false;
}

Rational FieldElement::rational_value() const {
    if (ctx_.is_rational()) return std::get<Rational>(v_);
    if (ctx_.is_cyclotomic() && is_rational_valued()) return std::get<CVec>(v_)[0];
    throw error("element is not a rational value");
}

void FieldElement::require_same_context(const FieldElement& o) const {
    if (ctx_ != o.ctx_)
        throw context_mismatch("context mismatch: " + ctx_.str() + " vs " + o.ctx_.str());
}

FieldElement FieldElement::operator-() const {
    switch (ctx_.kind) {
        case FieldContext::Kind::rational: return {ctx_, -std::get<Rational>(v_)};
        case FieldContext::Kind::cyclotomic: return {ctx_, cyclo().neg(std::get<CVec>(v_))};
        case FieldContext::Kind::finite: return {ctx_, ff().neg(std::get<FVec>(v_))};
    }
    throw error("bad context");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same_context(o);
    switch (ctx_.kind) {
        case FieldContext::Kind::rational:
            return {ctx_, std::get<Rational>(v_) + std::get<Rational>(o.v_)};
        case FieldContext::Kind::cyclotomic:
            return {ctx_, cyclo().add(std::get<CVec>(v_), std::get<CVec>(o.v_))};
        case FieldContext::Kind::finite:
            return {ctx_, ff().add(std::get<FVec>(v_), std::get<FVec>(o.v_))};
    }
    throw error("bad context");
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    require_same_context(o);
    switch (ctx_.kind) {
        case FieldContext::Kind::rational:
            return {ctx_, std::get<Rational>(v_) - std::get<Rational>(o.v_)};
        case FieldContext::Kind::cyclotomic:
            return {ctx_, cyclo().sub(std::get<CVec>(v_), std::get<CVec>(o.v_))};
        case FieldContext::Kind::finite:
            return {ctx_, ff().sub(std::get<FVec>(v_), std::get<FVec>(o.v_))};
    }
    throw error("bad context");
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same_context(o);
    switch (ctx_.kind) {
        case FieldContext::Kind::rational:
            return {ctx_, std::get<Rational>(v_) * std::get<Rational>(o.v_)};
        case FieldContext::Kind::cyclotomic:
            return {ctx_, cyclo().mul(std::get<CVec>(v_), std::get<CVec>(o.v_))};
        case FieldContext::Kind::finite:
            return {ctx_, ff().mul(std::get<FVec>(v_), std::get<FVec>(o.v_))};
    }
    throw error("bad context");
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw division_by_zero();
    switch (ctx_.kind) {
        case FieldContext::Kind::rational: return {ctx_, std::get<Rational>(v_).inverse()};
        case FieldContext::Kind::cyclotomic: return {ctx_, cyclo().inv(std::get<CVec>(v_))};
        case FieldContext::Kind::finite: return {ctx_, ff().inv(std::get<FVec>(v_))};
    }
    throw error("bad context");
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

FieldElement FieldElement::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement r = one(ctx_);
    FieldElement b = *this;
    unsigned long ue = (unsigned long)e;
    while (ue > 0) {
        if (ue & 1) r *= b;
        b *= b;
        ue >>= 1;
    }
    return r;
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (ctx_ != o.ctx_) return false;
    return v_ == o.v_;
}

FieldElement FieldElement::embed(const FieldContext& target) const {
    if (ctx_ == target) return *this;
    if (ctx_.is_rational() && target.is_cyclotomic())
        return from_rational(target, std::get<Rational>(v_));
    if (ctx_.is_cyclotomic() && target.is_cyclotomic()) {
        unsigned m = ctx_.conductor, M = target.conductor;
        if (M % m != 0)
            throw context_mismatch("conductor " + std::to_string(m) + " does not divide " +
                                   std::to_string(M));
        const auto& src = cyclo();
        const auto& dst = cyclotomic_table(M);
        unsigned step = M / m;
        auto out = dst.zero();
        const auto& a = std::get<CVec>(v_);
        for (unsigned j = 0; j < src.phi; ++j) {
            if (a[j].is_zero()) continue;
            const auto& row = dst.power_mod[(std::uint64_t)j * step % M];
            for (unsigned i = 0; i < dst.phi; ++i) out[i] += a[j] * row[i];
        }
        return {target, out};
    }
    if (ctx_.is_finite() && target.is_finite() && ctx_.p == target.p && ctx_.k == 1) {
        // prime subfield into the extension
        FVec out(target.k, 0);
        out[0] = std::get<FVec>(v_)[0];
        return {target, out};
    }
    throw context_mismatch("cannot embed " + ctx_.str() + " into " + target.str());
}

FieldElement FieldElement::galois_apply(unsigned u) const {
    if (!ctx_.is_cyclotomic()) return *this;
    return {ctx_, cyclo().galois(std::get<CVec>(v_), u)};
}

std::vector<FieldElement> FieldElement::galois_orbit() const {
    if (!ctx_.is_cyclotomic()) return {*this};
    std::vector<FieldElement> orbit;
    for (unsigned u : units_mod(ctx_.conductor)) {
        FieldElement img = galois_apply(u);
        if (std::find(orbit.begin(), orbit.end(), img) == orbit.end()) orbit.push_back(img);
    }
    return orbit;
}

FieldElement FieldElement::times_integer(long n) const {
    return *this * integer(ctx_, n);
}

std::uint64_t FieldElement::index() const {
    if (!ctx_.is_finite()) throw error("index() needs a finite context");
    return ff().index_of(std::get<FVec>(v_));
}

std::string FieldElement::str() const {
    switch (ctx_.kind) {
        case FieldContext::Kind::rational: return std::get<Rational>(v_).str();
        case FieldContext::Kind::finite: return ff().str(std::get<FVec>(v_));
        case FieldContext::Kind::cyclotomic: break;
    }
    const auto& a = std::get<CVec>(v_);
    const unsigned m = ctx_.conductor;
    std::string out;
    bool first = true;
    for (unsigned j = cyclo().phi; j-- > 0;) {
        if (a[j].is_zero()) continue;
        Rational c = a[j];
        std::string mono;
        if (j > 0) {
            mono = "z" + std::to_string(m);
            if (j > 1) mono += "^" + std::to_string(j);
        }
        std::string piece;
        Rational mag = c.abs();
        if (mono.empty()) {
            piece = mag.str();
        } else if (mag.is_one()) {
            piece = mono;
        } else {
            piece = mag.str() + "*" + mono;
        }
        if (first) {
            out += (c.sign() < 0 ? "-" : "") + piece;
            first = false;
        } else {
            out += (c.sign() < 0 ? "-" : "+") + piece;
        }
    }
    if (first) out = "0";
    return out;
}

bool FieldElement::needs_parens_in_product() const {
    if (!ctx_.is_cyclotomic()) return false;
    const auto& a = std::get<CVec>(v_);
    int nonzero = 0;
    for (const auto& c : a)
        if (!c.is_zero()) ++nonzero;
    return nonzero > 1;
}

int FieldElement::compare(const FieldElement& a, const FieldElement& b) {
    if (a.ctx_ != b.ctx_) throw context_mismatch("compare across contexts");
    switch (a.ctx_.kind) {
        case FieldContext::Kind::rational: {
            const auto &x = std::get<Rational>(a.v_), &y = std::get<Rational>(b.v_);
            return x < y ? -1 : (x == y ? 0 : 1);
        }
        case FieldContext::Kind::cyclotomic: {
            const auto &x = std::get<CVec>(a.v_), &y = std::get<CVec>(b.v_);
            for (std::size_t i = x.size(); i-- > 0;) {
                if (x[i] < y[i]) return -1;
                if (y[i] < x[i]) return 1;
            }
            return 0;
        }
        case FieldContext::Kind::finite: {
            auto xi = a.index(), yi = b.index();
            return xi < yi ? -1 : (xi == yi ? 0 : 1);
        }
    }
    return 0;
}

std::pair<FieldElement, FieldElement> promote(const FieldElement& a, const FieldElement& b) {
    auto ctx = unify(a.context(), b.context());
    if (!ctx)
        throw context_mismatch("no common context for " + a.context().str() + " and " +
                               b.context().str());
    return {a.embed(*ctx), b.embed(*ctx)};
}

}  // namespace sdr
