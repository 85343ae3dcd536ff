#include "sdr/curve.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "sdr/errors.hpp"
#include "sdr/parse.hpp"
#include "sdr/resultant.hpp"

namespace sdr {

PlaneCurve::PlaneCurve(TernaryPoly F) : F_(std::move(F)) {
    auto d = F_.homogeneous_degree();
    if (!d) throw error("curve polynomial must be homogeneous and nonzero");
    degree_ = *d;
}

bool PlaneCurve::contains(const ProjectivePoint& P) const {
    auto ctx = unify(context(), P.context());
    if (!ctx) throw context_mismatch("point context incompatible with curve");
    auto Pe = P.embedded(*ctx);
    return F_.embedded(*ctx).evaluate(Pe.coords()).is_zero();
}

bool PlaneCurve::smooth_at(const ProjectivePoint& P) const {
    auto ctx = unify(context(), P.context());
    if (!ctx) throw context_mismatch("point context incompatible with curve");
    auto Pe = P.embedded(*ctx);
    for (int i = 0; i < 3; ++i)
        if (!F_.derivative(i).embedded(*ctx).evaluate(Pe.coords()).is_zero()) return true;
    return false;
}

FieldElement PlaneCurve::smoothness_certificate() const {
    unsigned p = context().characteristic();
    if (p != 0 && degree_ % p == 0)
        throw smoothness_undecidable("characteristic " + std::to_string(p) +
                                     " divides the degree " + std::to_string(degree_));
    return macaulay_resultant(F_.derivative(0), F_.derivative(1), F_.derivative(2));
}

bool PlaneCurve::is_smooth() const { return !smoothness_certificate().is_zero(); }

PlaneCurve PlaneCurve::parse(std::istream& in) {
    std::string header, body;
    if (!std::getline(in, header)) throw error("curve file: missing field header");
    auto pos = header.find(':');
    if (pos == std::string::npos || header.substr(0, pos) != "field")
        throw error("curve file: first line must be 'field: ...'");
    FieldContext ctx = FieldContext::parse(header.substr(pos + 1));
    if (!std::getline(in, body)) throw error("curve file: missing polynomial line");
    return PlaneCurve(parse_poly(body, ctx));
}

PlaneCurve PlaneCurve::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open curve file '" + path + "'");
    return parse(in);
}

std::string PlaneCurve::str() const {
    return "field: " + context().str() + "\n" + F_.str() + "\n";
}

Divisor::Divisor(std::shared_ptr<const PlaneCurve> curve, std::vector<Entry> entries)
    : curve_(std::move(curve)), entries_(std::move(entries)) {
    normalize();
}

void Divisor::normalize() {
    if (entries_.empty()) return;
    // promote every point into one common context
    FieldContext ctx = entries_[0].point.context();
    for (const auto& e : entries_) {
        auto u = unify(ctx, e.point.context());
        if (!u) throw context_mismatch("divisor points in incompatible contexts");
        ctx = *u;
    }
    std::vector<Entry> merged;
    for (const auto& e : entries_) {
        if (e.mult == 0) continue;
        ProjectivePoint p = e.point.embedded(ctx);
        auto it = std::find_if(merged.begin(), merged.end(),
                               [&](const Entry& f) { return f.point == p; });
        if (it == merged.end())
            merged.push_back({p, e.mult});
        else
            it->mult += e.mult;
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const Entry& e) { return e.mult == 0; }),
                 merged.end());
    std::sort(merged.begin(), merged.end(),
              [](const Entry& a, const Entry& b) { return ProjectivePoint::less(a.point, b.point); });
    entries_ = std::move(merged);
}

long Divisor::degree() const {
    long d = 0;
    for (const auto& e : entries_) d += e.mult;
    return d;
}

bool Divisor::is_effective() const {
    for (const auto& e : entries_)
        if (e.mult < 0) return false;
    return true;
}

void Divisor::require_same_curve(const Divisor& o) const {
    if (curve_ == o.curve_) return;
    if (curve_ && o.curve_ && curve_->poly() == o.curve_->poly()) return;
    throw error("divisors on different ambient curves");
}

Divisor Divisor::operator+(const Divisor& o) const {
    require_same_curve(o);
    std::vector<Entry> all = entries_;
    all.insert(all.end(), o.entries_.begin(), o.entries_.end());
    return Divisor(curve_, std::move(all));
}

Divisor Divisor::operator-() const {
    std::vector<Entry> all = entries_;
    for (auto& e : all) e.mult = -e.mult;
    return Divisor(curve_, std::move(all));
}

Divisor Divisor::scaled(long k) const {
    std::vector<Entry> all = entries_;
    for (auto& e : all) e.mult *= k;
    return Divisor(curve_, std::move(all));
}

bool Divisor::equals(const Divisor& o) const {
    require_same_curve(o);
    return (*this - o).is_zero();
}

bool Divisor::galois_invariant() const {
    if (entries_.empty()) return true;
    FieldContext ctx = entries_[0].point.context();
    if (!ctx.is_cyclotomic()) return true;  // all-rational divisors are fixed
    for (unsigned u : units_mod(ctx.conductor)) {
        if (!equals(galois_apply(u))) return false;
    }
    return true;
}

Divisor Divisor::apply(const Mat& T) const {
    std::vector<Entry> out = entries_;
    for (auto& e : out) e.point = e.point.apply(T);
    return Divisor(curve_, std::move(out));
}

Divisor Divisor::galois_apply(unsigned u) const {
    std::vector<Entry> out = entries_;
    for (auto& e : out) e.point = e.point.galois_apply(u);
    return Divisor(curve_, std::move(out));
}

std::string Divisor::str() const {
    std::string s;
    for (const auto& e : entries_) s += std::to_string(e.mult) + " " + e.point.str() + "\n";
    return s;
}

Divisor Divisor::parse(std::istream& in, std::shared_ptr<const PlaneCurve> curve) {
    std::string header;
    if (!std::getline(in, header)) throw error("divisor file: missing field header");
    auto pos = header.find(':');
    if (pos == std::string::npos || header.substr(0, pos) != "field")
        throw error("divisor file: first line must be 'field: ...'");
    FieldContext ctx = FieldContext::parse(header.substr(pos + 1));
    std::vector<Divisor::Entry> entries;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        long mult;
        if (!(ls >> mult)) throw error("divisor file: bad multiplicity in '" + line + "'");
        std::string rest;
        std::getline(ls, rest);
        auto open = rest.find('(');
        auto close = rest.rfind(')');
        if (open == std::string::npos || close == std::string::npos || close <= open)
            throw error("divisor file: bad point in '" + line + "'");
        std::string inner = rest.substr(open + 1, close - open - 1);
        std::array<std::string, 3> parts;
        int idx = 0;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= inner.size(); ++i) {
            if (i == inner.size() || inner[i] == ',') {
                if (idx > 2) throw error("divisor file: too many coordinates");
                parts[idx++] = inner.substr(start, i - start);
                start = i + 1;
            }
        }
        if (idx != 3) throw error("divisor file: expected three coordinates");
        entries.push_back({ProjectivePoint(parse_element(parts[0], ctx),
                                           parse_element(parts[1], ctx),
                                           parse_element(parts[2], ctx)),
                           mult});
    }
    return Divisor(std::move(curve), std::move(entries));
}

}  // namespace sdr
