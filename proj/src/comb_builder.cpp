#include "hypspeed/comb_builder.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hypspeed {

namespace {

constexpr double kMargin = 0.999;

double table_lookup(const std::vector<std::pair<double, double>>& table, double t) {
    if (t <= 0.0) return 0.0;
    // log-log interpolation, linear extrapolation of the end segments
    auto seg = std::upper_bound(table.begin(), table.end(), t,
                                [](double v, const auto& e) { return v < e.first; });
    std::size_t hi = static_cast<std::size_t>(seg - table.begin());
    hi = std::clamp<std::size_t>(hi, 1, table.size() - 1);
    const auto& p0 = table[hi - 1];
    const auto& p1 = table[hi];
    const double u = (std::log(t) - std::log(p0.first)) / (std::log(p1.first) - std::log(p0.first));
    return std::exp(std::log(p0.second) + u * (std::log(p1.second) - std::log(p0.second)));
}

}  // namespace

double GSpec::operator()(double t) const {
    switch (kind) {
        case GKind::Log1p: return std::log1p(t);
        case GKind::Sqrt: return std::sqrt(t);
        case GKind::Pow: return std::pow(t, exponent);
        case GKind::Table: return table_lookup(table, t);
    }
    return 0.0;
}

std::string GSpec::name() const {
    switch (kind) {
        case GKind::Log1p: return "log1p";
        case GKind::Sqrt: return "sqrt";
        case GKind::Pow: {
            std::ostringstream os;
            os << "pow(" << exponent << ")";
            return os.str();
        }
        case GKind::Table: return "table";
    }
    return "unknown";
}

std::vector<double> ASpec::terms(int n) const {
    std::vector<double> out;
    switch (kind) {
        case AKind::Linear:
            for (int j = 1; j <= n; ++j) out.push_back(j);
            break;
        case AKind::Geometric:
            if (!(ratio > 1.0)) throw ValidationError("geometric a_j needs ratio > 1");
            for (int j = 0; j < n; ++j) out.push_back(std::pow(ratio, j));
            break;
        case AKind::Explicit:
            if (static_cast<int>(values.size()) < n)
                throw ValidationError("explicit a_j list shorter than J + 1");
            out.assign(values.begin(), values.begin() + n);
            break;
    }
    for (std::size_t j = 0; j < out.size(); ++j) {
        if (!(out[j] > 0.0) || !std::isfinite(out[j])) throw ValidationError("a_j must be positive");
        if (j > 0 && !(out[j] > out[j - 1])) throw ValidationError("a_j must be strictly increasing");
    }
    return out;
}

bool sublinear_on_probe(const GSpec& g) {
    for (int k = 3; k <= 12; ++k) {
        const double T = std::pow(10.0, k);
        const double hi = g(T), lo = g(T / 10.0);
        if (!std::isfinite(hi) || !(hi > lo)) return false;
        if (!(hi / T < 0.5 * lo / (T / 10.0))) return false;
    }
    return true;
}

double CombConstruction::constraint(int j) const {
    const double bn = b[j];
    return (j * a[j] * g(bn) + x[j - 1]) / bn;
}

CombConstruction build_comb(const GSpec& g, const ASpec& a_spec, int J) {
    if (J < 1) throw ValidationError("comb needs J >= 1");
    if (g.kind == GKind::Table) {
        if (g.table.size() < 2) throw ValidationError("g table needs at least two rows");
        for (std::size_t i = 0; i < g.table.size(); ++i) {
            if (!(g.table[i].first > 0.0) || !(g.table[i].second > 0.0))
                throw ValidationError("g table entries must be positive");
            if (i > 0 && !(g.table[i].first > g.table[i - 1].first))
                throw ValidationError("g table abscissae must increase");
        }
    }
    if (g.kind == GKind::Pow && !(g.exponent > 0.0 && g.exponent < 1.0))
        throw ValidationError("pow(p) needs 0 < p < 1");
    if (!sublinear_on_probe(g)) throw ValidationError("g is not sublinear on the probe grid (g(t)/t -> 0 fails)");

    CombConstruction cc;
    cc.g = g;
    cc.a = a_spec.terms(J + 1);
    cc.b.push_back(1.0);
    for (int j = 1; j <= J; ++j) {
        const double aj = cc.a[j - 1], an = cc.a[j];
        const double xj = cc.b[j - 1] + std::sqrt(an * an - aj * aj);
        cc.x.push_back(xj);
        auto ok = [&](double b) { return (j * an * g(b) + xj) / b < kMargin; };
        double hi = 2.0 * xj;
        double lo = xj;
        int doublings = 0;
        while (!ok(hi)) {
            lo = hi;
            hi *= 2.0;
            if (++doublings > 2000 || !std::isfinite(hi))
                throw ValidationError("comb construction: no admissible b_{j+1}");
        }
        for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            (ok(mid) ? hi : lo) = mid;
        }
        cc.b.push_back(hi);
    }
    cc.extent = cc.b.back();

    Comb comb;
    for (std::size_t j = 0; j < cc.a.size(); ++j) comb.teeth.push_back({cc.a[j], cc.b[j]});
    comb.extent = cc.extent;
    cc.domain = build_domain(comb);
    return cc;
}

std::vector<CombRatio> verify_comb(const CombConstruction& cc) {
    std::vector<CombRatio> out;
    for (int j = 1; j <= cc.J(); ++j) {
        CombRatio r;
        r.j = j;
        const double bn = cc.b[j], xj = cc.x[j - 1], an = cc.a[j];
        r.lower = quasihyp_lower(cc.domain, kCombStart, bn);
        r.g_value = cc.g(bn);
        r.ratio = r.lower / r.g_value;
        r.restricted = quasihyp_lower(cc.domain, xj, bn);
        r.restricted_closed_form = (bn - xj) / (4.0 * an);
        out.push_back(r);
    }
    return out;
}

}  // namespace hypspeed
