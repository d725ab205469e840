#include "hypspeed/speeds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hypspeed {

SpeedSample speeds_at(const HalfPlanePoint& frame, double t) {
    SpeedSample s;
    s.t = t;
    s.v = k_half(HalfPlanePoint::polar(0.0, 0.0), frame);
    s.v_o = 0.5 * std::abs(frame.log_rho());
    s.v_T = dist_to_positive_axis(frame);
    s.log_rho = frame.log_rho();
    s.theta = frame.theta();
    return s;
}

std::vector<SpeedSample> sample_speeds_from(const KoenigsSemigroup& sg, DiscPoint z,
                                            std::span<const double> grid) {
    if (!sg.has_model())
        throw UnsupportedError("speeds need a closed-form map; use quasihyp_lower for combs");
    std::vector<SpeedSample> out;
    out.reserve(grid.size());
    for (double t : grid) out.push_back(speeds_at(sg.frame_point(z, t), t));
    return out;
}

std::vector<SpeedSample> sample_speeds(const KoenigsSemigroup& sg, std::span<const double> grid) {
    return sample_speeds_from(sg, DiscPoint{}, grid);
}

std::vector<double> make_grid(double t_min, double t_max, int points) {
    if (!(t_min >= 0.0) || !(t_max > t_min) || !std::isfinite(t_max))
        throw std::invalid_argument("grid needs 0 <= t_min < t_max");
    if (points < 2) throw std::invalid_argument("grid needs at least 2 points");
    std::vector<double> grid(points);
    const int last = points - 1;
    if (t_min == 0.0) {
        for (int i = 0; i < points; ++i) grid[i] = t_max * i / last;
    } else {
        const double lo = std::log(t_min), hi = std::log(t_max);
        for (int i = 0; i < points; ++i) grid[i] = std::exp(lo + (hi - lo) * i / last);
    }
    grid.front() = t_min;
    grid.back() = t_max;
    return grid;
}

std::vector<double> default_grid() { return make_grid(1.0, 1e8, 512); }

SurrogateReport surrogate_speeds(const KoenigsSemigroup& sg, std::span<const double> grid) {
    if (!sg.has_model())
        throw UnsupportedError("speeds need a closed-form map; use quasihyp_lower for combs");
    SurrogateReport rep;
    std::vector<HalfPlanePoint> frames;
    frames.reserve(grid.size());
    for (double t : grid) frames.push_back(sg.frame_point(DiscPoint{}, t));
    std::size_t first = 0;
    for (std::size_t i = 0; i < frames.size(); ++i)
        if (frames[i].log_rho() < 0.0) first = i + 1;
    rep.t0 = first < grid.size() ? grid[first] : std::numeric_limits<double>::infinity();

    for (std::size_t i = 0; i < frames.size(); ++i) {
        const HalfPlanePoint& p = frames[i];
        const SpeedSample s = speeds_at(p, grid[i]);
        // |tau - eta| = 2 / |P + 1|
        SurrogateSample g;
        g.t = s.t;
        g.s_orth = 0.5 * (log_abs_shift(p, 1.0) - kLog2);
        g.s_total = -0.5 * log_one_minus_abs_cayley_inv(p);
        g.s_tang = g.s_total - g.s_orth;
        g.dev_total = std::abs(s.v - g.s_total);
        g.dev_orth = std::abs(s.v_o - g.s_orth);
        g.dev_tang = std::abs(s.v_T - g.s_tang);
        g.pre_threshold = i < first;
        rep.samples.push_back(g);
    }
    return rep;
}

double series_value(const SpeedSample& s, Series series) {
    switch (series) {
        case Series::V: return s.v;
        case Series::VO: return s.v_o;
        case Series::VT: return s.v_T;
    }
    return s.v;
}

std::string to_string(Basis basis) { return basis == Basis::LogT ? "log_t" : "t"; }

std::string to_string(Series series) {
    switch (series) {
        case Series::V: return "v";
        case Series::VO: return "v_o";
        case Series::VT: return "v_T";
    }
    return "v";
}

Basis basis_from_string(const std::string& name) {
    if (name == "log_t") return Basis::LogT;
    if (name == "t") return Basis::T;
    throw std::invalid_argument("unknown basis '" + name + "' (expected log_t or t)");
}

Series series_from_string(const std::string& name) {
    if (name == "v") return Series::V;
    if (name == "v_o") return Series::VO;
    if (name == "v_T") return Series::VT;
    throw std::invalid_argument("unknown series '" + name + "' (expected v, v_o or v_T)");
}

AsymptoticFit fit_asymptotic(std::span<const SpeedSample> samples, Series series, Basis basis,
                             double t_lo, double t_hi) {
    auto phi = [&](double t) { return basis == Basis::LogT ? std::log(t) : t; };
    std::vector<double> xs, ys;
    for (const auto& s : samples) {
        if (s.t < t_lo || s.t > t_hi) continue;
        if (basis == Basis::LogT && !(s.t > 0.0)) continue;
        xs.push_back(phi(s.t));
        ys.push_back(series_value(s, series));
    }
    if (xs.size() < 20) throw std::invalid_argument("fit window holds fewer than 20 samples");

    const double n = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (!(sxx > 0.0)) throw std::invalid_argument("fit window has no spread in the basis");

    AsymptoticFit fit;
    fit.basis = basis;
    fit.series = series;
    fit.coefficient = sxy / sxx;
    fit.intercept = my - fit.coefficient * mx;
    fit.t_lo = t_lo;
    fit.t_hi = t_hi;
    fit.samples = static_cast<int>(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        fit.sup_residual = std::max(fit.sup_residual, std::abs(ys[i] - fit.coefficient * xs[i]));
    return fit;
}

double nontangential_ratio(const KoenigsSemigroup& sg, Complex p, double t) {
    const DomainSpec& dom = sg.image_domain();
    if (!dom.contains(p)) throw std::domain_error("nontangential_ratio: p outside h(D)");
    if (!(t >= 0.0)) throw std::invalid_argument("nontangential_ratio: t must be >= 0");
    if (t == 0.0) return 1.0;
    const Complex q = p + Complex{0.0, t};
    const double minus = std::min(t, delta_pm(dom, {Side::Minus, p}, q));
    const double plus = std::min(t, delta_pm(dom, {Side::Plus, p}, q));
    return minus / plus;
}

NontangentialReport nontangential_report(const KoenigsSemigroup& sg, Complex p,
                                         std::span<const double> grid) {
    if (grid.empty()) throw std::invalid_argument("nontangential_report: empty grid");
    const DiscPoint z = sg.koenigs_inverse(p);
    const auto speeds = sample_speeds_from(sg, z, grid);
    std::vector<double> spread(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double r = nontangential_ratio(sg, p, grid[i]);
        spread[i] = std::max(r, 1.0 / r);
    }

    NontangentialReport rep;
    const std::size_t last = grid.size() - 1;
    rep.t_max = grid[last];
    rep.ratio_at_tmax = nontangential_ratio(sg, p, grid[last]);
    rep.v_T_at_tmax = speeds[last].v_T;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        rep.ratio_sup = std::max(rep.ratio_sup, spread[i]);
        rep.v_T_sup = std::max(rep.v_T_sup, speeds[i].v_T);
    }
    std::size_t mid = 0;
    for (std::size_t i = 0; i < grid.size(); ++i)
        if (grid[i] <= rep.t_max / 100.0) mid = i;
    rep.ratio_bounded = !(spread[last] > 10.0 * spread[mid]);
    rep.v_T_bounded = !(speeds[last].v_T > speeds[mid].v_T + 1.0);
    rep.agree = rep.ratio_bounded == rep.v_T_bounded;
    return rep;
}

}  // namespace hypspeed
