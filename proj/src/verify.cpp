#include "hypspeed/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>

namespace hypspeed {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kHalfLog2 = 0.5 * kLog2;

struct Tally {
    double tol;
    long long samples = 0;
    long long violations = 0;
    double worst = kInf;

    // margin >= 0 means the inequality holds; scale widens tol for large values
    void check(double margin, double scale = 1.0) {
        ++samples;
        if (std::isnan(margin)) {
            ++violations;
            worst = -kInf;
            return;
        }
        worst = std::min(worst, margin);
        if (margin < -tol * std::max(1.0, scale)) ++violations;
    }
    void equal(double a, double b) { check(-std::abs(a - b), std::max(std::abs(a), std::abs(b))); }
    // for quantities whose floating-point conditioning is known explicitly
    void check_within(double margin, double allowance) {
        ++samples;
        if (std::isnan(margin)) {
            ++violations;
            worst = -kInf;
            return;
        }
        worst = std::min(worst, margin);
        if (margin < -std::max(tol, allowance)) ++violations;
    }
};

SuiteReport finish(const std::string& name, const Tally& tally, std::uint64_t seed,
                   std::map<std::string, double> details = {}) {
    SuiteReport r;
    r.suite = name;
    r.samples = tally.samples;
    r.violations = tally.violations;
    r.worst_margin = tally.samples > 0 ? tally.worst : 0.0;
    r.seed = seed;
    r.tol = tally.tol;
    r.details = std::move(details);
    return r;
}

// Angle whose tangential distance k(1, e^{i theta}) equals d.
HalfPlanePoint angled(double log_rho, double d, bool negative) {
    return HalfPlanePoint::from_gap(log_rho, 2.0 * std::atan(std::exp(-2.0 * d)), negative);
}

HalfPlanePoint random_angled(Rng& rng, double log_rho, double d_max = 12.0) {
    const double d = rng.uniform(0.0, d_max);
    return angled(log_rho, d, rng.uniform() < 0.5);
}

double half_log_sec(const HalfPlanePoint& w) { return -0.5 * w.log_cos_theta(); }

HalfPlanePoint radial(double log_rho) { return HalfPlanePoint::polar(log_rho, 0.0); }

Complex random_unimodular(Rng& rng) { return unit(rng.uniform(-kPi, kPi)); }

struct ExampleRun {
    BuiltExample example;
    KoenigsSemigroup sg;
    std::vector<SpeedSample> speeds;
};

std::vector<ExampleRun> run_examples(std::span<const double> grid) {
    std::vector<ExampleRun> runs;
    for (auto& ex : built_examples()) {
        KoenigsSemigroup sg = make_semigroup(ex.domain);
        auto speeds = sample_speeds(sg, grid);
        runs.push_back({ex, sg, std::move(speeds)});
    }
    return runs;
}

std::vector<double> suite_grid(long long samples) {
    return samples >= 2 ? make_grid(1.0, 1e8, static_cast<int>(samples)) : default_grid();
}

// ---------------------------------------------------------------------------

SuiteReport suite_lemma_halfplane(long long n, std::uint64_t seed, double tol) {
    Rng rng(seed);
    Tally tally{tol};
    double max_path_error = 0.0;
    long long path_checks = 0;
    const long long path_samples = std::min<long long>(n, 1000);

    for (long long i = 0; i < n; ++i) {
        // (1) radial distance and the length of a ray
        const double l0 = rng.uniform(-10.0, 10.0);
        const double l1 = l0 + rng.uniform(0.0, 20.0);
        tally.equal(k_half(radial(l0), radial(l1)), 0.5 * (l1 - l0));
        if (i < path_samples) {
            const double beta = rng.uniform(-1.4, 1.4);
            const double r0 = std::exp(rng.uniform(-3.0, 3.0));
            const double r1 = r0 * std::exp(rng.uniform(0.01, 3.0));
            const Complex dir = unit(beta);
            const Complex ray[2] = {r0 * dir, r1 * dir};
            const double expected = std::log(r1 / r0) / (2.0 * std::cos(beta));
            const double err = std::abs(path_length(Space::HalfPlane, ray) - expected);
            max_path_error = std::max(max_path_error, err);
            ++path_checks;
            if (err > 1e-5) ++tally.violations;
            tally.equal(kappa(Space::HalfPlane, r0 * dir, dir) * 2.0 * r0 * std::cos(beta), 1.0);
        }

        // (2) leaving the axis costs at least 1/2 log(1/cos beta)
        {
            const double a = rng.uniform(-10.0, 10.0), b = rng.uniform(-10.0, 10.0);
            const HalfPlanePoint w = random_angled(rng, b);
            const double lhs = k_half(radial(a), w) - k_half(radial(a), radial(b));
            tally.check(lhs - half_log_sec(w), lhs);
        }

        // (3) rho -> k(rho e^{i alpha}, rho0 e^{i beta}) is minimal at rho0, monotone on each side
        {
            const double l0 = rng.uniform(-10.0, 10.0);
            const double da = rng.uniform(0.0, 8.0);
            const bool na = rng.uniform() < 0.5;
            const HalfPlanePoint target = random_angled(rng, l0);
            auto f = [&](double l) { return k_half(angled(l, da, na), target); };
            const double at_min = f(l0);
            const double s = rng.uniform(0.0, 10.0), u = rng.uniform(0.0, 10.0);
            const double up1 = f(l0 + s), up2 = f(l0 + s + u);
            const double dn1 = f(l0 - s), dn2 = f(l0 - s - u);
            tally.check(up1 - at_min, up1);
            tally.check(dn1 - at_min, dn1);
            tally.check(up2 - up1, up2);
            tally.check(dn2 - dn1, dn2);
        }

        // (4) scale invariance, evenness and monotonicity in the angle
        {
            const double l = rng.uniform(-10.0, 10.0);
            const double d0 = rng.uniform(0.0, 12.0), d1 = rng.uniform(0.0, 12.0);
            const bool n0 = rng.uniform() < 0.5, n1 = rng.uniform() < 0.5;
            tally.equal(k_half(angled(l, d0, n0), angled(l, d1, n1)),
                        k_half(angled(0.0, d0, n0), angled(0.0, d1, n1)));
            tally.equal(k_half(radial(0.0), angled(0.0, d0, false)),
                        k_half(radial(0.0), angled(0.0, d0, true)));
            const double lo = std::min(d0, d1), hi = std::max(d0, d1);
            const double klo = k_half(radial(0.0), angled(0.0, lo, false));
            const double khi = k_half(radial(0.0), angled(0.0, hi, false));
            tally.check(khi - klo, khi);
        }

        // (5) distance dominates the distance of the projections
        {
            const double a = rng.uniform(-10.0, 10.0);
            const double b = a + rng.uniform(0.0, 20.0);
            const HalfPlanePoint z = random_angled(rng, a), w = random_angled(rng, b);
            const double lhs = k_half(z, w);
            tally.check(lhs - k_half(radial(a), radial(b)), lhs);
        }

        // (6) k(rho, rho e^{i beta}) <= 1/2 log(1/cos beta) + 1/2 log 2
        {
            const double l = rng.uniform(-10.0, 10.0);
            const HalfPlanePoint w = random_angled(rng, l);
            const double k = k_half(radial(l), w);
            tally.check(half_log_sec(w) + kHalfLog2 - k, k);
        }
    }
    return finish("lemma_halfplane", tally, seed,
                  {{"items", 6.0},
                   {"path_length_checks", static_cast<double>(path_checks)},
                   {"path_length_max_error", max_path_error}});
}

SuiteReport suite_pythagoras(long long n, std::uint64_t seed, double tol) {
    Rng rng(seed);
    Tally tally{tol};
    double min_gap = kInf, max_gap = -kInf;
    for (long long i = 0; i < n; ++i) {
        // half-plane frame: geodesic (0, inf), x0 at distance d0 from 1
        const double d0 = rng.uniform(0.0, 12.0);
        const HalfPlanePoint x0 = radial(rng.uniform() < 0.5 ? 2.0 * d0 : -2.0 * d0);
        const HalfPlanePoint z = sample_halfplane(rng);
        const double direct = k_half(x0, z);
        const double sum = k_half(x0, project_to_positive_axis(z)) + dist_to_positive_axis(z);
        tally.check(sum - direct, sum);
        tally.check(direct - (sum - kHalfLog2), sum);
        min_gap = std::min(min_gap, sum - direct);
        max_gap = std::max(max_gap, sum - direct);

        // disc picture on a random diameter
        const RadialGeodesic geo(random_unimodular(rng));
        const double e0 = rng.uniform(-6.0, 6.0);
        const DiscPoint xd(std::tanh(e0) * geo.direction());
        const DiscPoint zd = sample_disc(rng, 6.0);
        const double dd = omega(xd, zd);
        const double sd = omega(xd, project_to_radius(zd, geo)) + dist_to_radius(zd, geo);
        tally.check(sd - dd, sd);
        tally.check(dd - (sd - kHalfLog2), sd);
    }
    // the upper inequality is attained up to 0.05 by some sample
    const bool attained = min_gap <= 0.05;
    if (!attained) ++tally.violations;
    return finish("pythagoras", tally, seed,
                  {{"min_upper_gap", min_gap}, {"max_upper_gap", max_gap},
                   {"upper_attained", attained ? 1.0 : 0.0}});
}

SuiteReport suite_contraction(long long n, std::uint64_t seed, double tol) {
    Rng rng(seed);
    Tally tally{tol};
    double max_roundtrip = 0.0, max_isometry = 0.0, max_automorphism = 0.0;
    for (long long i = 0; i < n; ++i) {
        const HalfPlanePoint z = sample_halfplane(rng), w = sample_halfplane(rng);
        const double k = k_half(z, w);
        tally.check(k - k_half(project_to_positive_axis(z), project_to_positive_axis(w)), k);

        const RadialGeodesic geo(random_unimodular(rng));
        const DiscPoint zd = sample_disc(rng, 6.0), wd = sample_disc(rng, 6.0);
        const double om = omega(zd, wd);
        tally.check(om - omega(project_to_radius(zd, geo), project_to_radius(wd, geo)), om);

        // Cayley transform: inverse pair and isometry
        const DiscPoint back = cayley_inv(cayley(zd));
        const double rt = std::max(std::abs(back.real() - zd.real()), std::abs(back.imag() - zd.imag()));
        max_roundtrip = std::max(max_roundtrip, rt);
        if (rt > 1e-12) ++tally.violations;
        const double iso = std::abs(k_half(cayley(zd), cayley(wd)) - om);
        max_isometry = std::max(max_isometry, iso / std::max(1.0, om));
        if (iso > 1e-10 * std::max(1.0, om)) ++tally.violations;

        // automorphisms are isometries
        const DiscAutomorphism m(sample_disc(rng, 2.0), rng.uniform(-kPi, kPi));
        const DiscPoint za = sample_disc(rng, 4.0), wa = sample_disc(rng, 4.0);
        const double oa = omega(za, wa);
        const double moved = std::abs(omega(m(za), m(wa)) - oa);
        max_automorphism = std::max(max_automorphism, moved / std::max(1.0, oa));
        if (moved > 1e-10 * std::max(1.0, oa)) ++tally.violations;
    }
    return finish("contraction", tally, seed,
                  {{"cayley_roundtrip_max", max_roundtrip},
                   {"cayley_isometry_max_rel", max_isometry},
                   {"automorphism_max_rel", max_automorphism}});
}

SuiteReport suite_split(long long n, std::uint64_t seed, double tol) {
    Tally tally{tol};
    for (const auto& run : run_examples(suite_grid(n))) {
        for (const auto& s : run.speeds) {
            tally.check(s.v_o + s.v_T - s.v, s.v);
            tally.check(s.v - (s.v_o + s.v_T - kHalfLog2), s.v);
        }
    }
    return finish("split", tally, seed);
}

SuiteReport suite_julia_tangent(long long n, std::uint64_t seed, double tol) {
    Tally tally{tol};
    std::map<std::string, double> details;
    for (const auto& run : run_examples(suite_grid(n))) {
        double worst = kInf;
        for (const auto& s : run.speeds) {
            const double m = s.v_o + 4.0 * kLog2 - s.v_T;
            tally.check(m, s.v_o);
            worst = std::min(worst, m);
        }
        details["min_slack:" + run.example.label] = worst;
    }
    return finish("julia_tangent", tally, seed, details);
}

SuiteReport suite_surrogates(long long n, std::uint64_t seed, double tol) {
    Tally tally{tol};
    std::map<std::string, double> details;
    for (const auto& ex : built_examples()) {
        const KoenigsSemigroup sg = make_semigroup(ex.domain);
        const auto grid = suite_grid(n);
        const SurrogateReport rep = surrogate_speeds(sg, grid);
        double dt = 0.0, dorth = 0.0, dtang = 0.0;
        for (const auto& g : rep.samples) {
            if (g.pre_threshold) continue;
            const double scale = g.s_total;
            tally.check(kHalfLog2 - g.dev_total, scale);
            tally.check(kHalfLog2 - g.dev_orth, scale);
            tally.check(3.0 * kHalfLog2 - g.dev_tang, scale);
            dt = std::max(dt, g.dev_total);
            dorth = std::max(dorth, g.dev_orth);
            dtang = std::max(dtang, g.dev_tang);
        }
        details["t0:" + ex.label] = rep.t0;
        details["max_dev_total:" + ex.label] = dt;
        details["max_dev_orth:" + ex.label] = dorth;
        details["max_dev_tang:" + ex.label] = dtang;
    }
    return finish("surrogates", tally, seed, details);
}

double class_lower_expression(const Classification& c, const SpeedSample& s) {
    switch (c.type) {
        case SemigroupType::Hyperbolic: return s.v - 0.5 * c.lambda * s.t;
        case SemigroupType::ParabolicPositiveStep: return s.v - std::log(s.t);
        case SemigroupType::ParabolicZeroStep: return s.v - 0.25 * std::log(s.t);
    }
    return s.v;
}

bool symmetric_about_base(const DomainSpec& d) {
    switch (d.kind()) {
        case DomainKind::Strip:
        case DomainKind::Koebe: return true;
        case DomainKind::Sector: return d.as<Sector>().alpha == d.as<Sector>().beta;
        default: return false;
    }
}

SuiteReport suite_lower_bounds(long long n, std::uint64_t seed, double tol) {
    Tally tally{tol};
    std::map<std::string, double> details;
    for (const auto& run : run_examples(suite_grid(n))) {
        const Classification c = classify(run.example.domain);
        const Complex base = run.sg.base_model_point();
        double worst = kInf;
        for (const auto& s : run.speeds) {
            if (!(s.t > 0.0)) continue;
            const double e = class_lower_expression(c, s);
            tally.check(e + 10.0);
            worst = std::min(worst, e);
            // the speed is the distance in the image domain along the vertical orbit
            const Complex top = base + Complex{0.0, s.t};
            tally.equal(s.v, k_domain(run.example.domain, base, top));
        }
        details["min_expression:" + run.example.label] = worst;
        if (symmetric_about_base(run.example.domain)) {
            for (double t : {1.0, 1e2, 1e4, 1e6}) {
                const double q = quasihyp_lower(run.example.domain, base.imag(), base.imag() + t, base.real());
                const double k = k_domain(run.example.domain, base, base + Complex{0.0, t});
                tally.check(k - q, k);
            }
        }
    }
    return finish("lower_bounds", tally, seed, details);
}

SuiteReport suite_betsakos(long long n, std::uint64_t seed, double tol) {
    Tally tally{tol};
    std::map<std::string, double> details;
    for (const auto& run : run_examples(suite_grid(n))) {
        const Classification c = classify(run.example.domain);
        if (c.type == SemigroupType::Hyperbolic) continue;
        double quarter = kInf, half = kInf, sector = kInf;
        double alpha_max = 0.0;
        if (run.example.domain.kind() == DomainKind::Sector) {
            const auto& s = run.example.domain.as<Sector>();
            alpha_max = std::max(s.alpha, s.beta);
        } else if (run.example.domain.kind() == DomainKind::Koebe) {
            alpha_max = kPi;
        }
        for (const auto& s : run.speeds) {
            if (!(s.t > 0.0)) continue;
            const double lt = std::log(s.t);
            quarter = std::min(quarter, s.v_o - 0.25 * lt);
            tally.check(s.v_o - 0.25 * lt + 10.0);
            if (c.type == SemigroupType::ParabolicPositiveStep) {
                half = std::min(half, s.v_o - 0.5 * lt);
                tally.check(s.v_o - 0.5 * lt + 10.0);
            }
            if (alpha_max > 0.0) {
                const double coef = kPi / (4.0 * alpha_max);
                sector = std::min({sector, s.v_o - coef * lt, s.v - coef * lt});
                tally.check(s.v_o - coef * lt + 10.0);
                tally.check(s.v - coef * lt + 10.0);
            }
        }
        details["min_vo_minus_quarter_log:" + run.example.label] = quarter;
        if (std::isfinite(half)) details["min_vo_minus_half_log:" + run.example.label] = half;
        if (std::isfinite(sector)) details["min_sector_expression:" + run.example.label] = sector;
    }
    return finish("betsakos", tally, seed, details);
}

// 0 when |value - target| <= tolerance
double within(double value, double target, double tolerance) {
    return tolerance - std::abs(value - target);
}

SuiteReport suite_sector_asymptotics(long long n, std::uint64_t seed, double tol) {
    Tally tally{tol};
    std::map<std::string, double> details;
    constexpr double lo = 1e6, hi = 1e8;
    for (const auto& run : run_examples(suite_grid(n))) {
        const std::string& label = run.example.label;
        const DomainSpec& d = run.example.domain;
        auto fit = [&](Series s, Basis b) { return fit_asymptotic(run.speeds, s, b, lo, hi); };
        double vt_sup = 0.0;
        double vt_lo = 0.0, vt_hi = 0.0;
        for (const auto& s : run.speeds) {
            if (s.t < lo || s.t > hi) continue;
            vt_sup = std::max(vt_sup, s.v_T);
            if (vt_lo == 0.0) vt_lo = s.v_T;
            vt_hi = s.v_T;
        }
        details["v_T_sup:" + label] = vt_sup;
        if (d.kind() == DomainKind::Sector || d.kind() == DomainKind::Koebe) {
            const double a = d.kind() == DomainKind::Koebe ? kPi : d.as<Sector>().alpha;
            const double b = d.kind() == DomainKind::Koebe ? kPi : d.as<Sector>().beta;
            const double orth = kPi / (2.0 * (a + b));
            const AsymptoticFit fo = fit(Series::VO, Basis::LogT);
            const AsymptoticFit fv = fit(Series::V, Basis::LogT);
            details["v_o_coefficient:" + label] = fo.coefficient;
            details["v_coefficient:" + label] = fv.coefficient;
            if (a > 0.0 && b > 0.0) {
                tally.check(within(fo.coefficient, orth, 0.02));
                tally.check(within(fv.coefficient, orth, 0.02));
                tally.check(3.0 - vt_sup);
                tally.check(1.0 - (vt_hi - vt_lo));
            } else {
                const AsymptoticFit ft = fit(Series::VT, Basis::LogT);
                details["v_T_coefficient:" + label] = ft.coefficient;
                tally.check(within(fv.coefficient, (kPi + a + b) / (2.0 * (a + b)), 0.03));
                tally.check(within(fo.coefficient, orth, 0.03));
                tally.check(within(ft.coefficient, 0.5, 0.03));
            }
        } else if (d.kind() == DomainKind::Strip) {
            const AsymptoticFit fv = fit(Series::V, Basis::T);
            details["v_over_t:" + label] = fv.coefficient;
            tally.check(within(fv.coefficient, 0.5 * classify(d).lambda, 0.01));
        } else if (d.kind() == DomainKind::HalfPlaneRight) {
            double sup = 0.0;
            for (const auto& s : run.speeds)
                if (s.t >= lo && s.t <= hi) sup = std::max(sup, std::abs(s.v - std::log(s.t)));
            details["sup_v_minus_log_t:" + label] = sup;
            tally.check(2.0 - sup);
        }
    }
    return finish("sector_asymptotics", tally, seed, details);
}

SuiteReport suite_basepoint(long long n, std::uint64_t seed, double tol) {
    Rng rng(seed);
    Tally tally{tol};
    const auto grid = default_grid();
    double max_law = 0.0, max_dw = 0.0;
    for (const auto& run : run_examples(grid)) {
        const Complex tau = denjoy_wolff(run.sg);
        tally.equal(std::abs(tau), 1.0);
        max_dw = std::max(max_dw, std::abs(orbit(run.sg, DiscPoint{}, 1e12).value - tau));
        for (long long i = 0; i < n; ++i) {
            const DiscPoint z = sample_disc(rng, 12.0);
            const double w = omega(DiscPoint{}, z);
            const auto other = sample_speeds_from(run.sg, z, grid);
            for (std::size_t k = 0; k < grid.size(); ++k) {
                const SpeedSample& a = run.speeds[k];
                const SpeedSample& b = other[k];
                const double scale = std::max(a.v, b.v);
                tally.check(w - std::abs(a.v_o - b.v_o), scale);
                tally.check(2.0 * w - std::abs(a.v_T - b.v_T), scale);
                // Schwarz-Pick along the orbits; log rho carries an absolute
                // rounding of eps*|log rho|, amplified by 1/cos(theta)
                const HalfPlanePoint fa = run.sg.frame_point(DiscPoint{}, grid[k]);
                const HalfPlanePoint fb = run.sg.frame_point(z, grid[k]);
                const double eps = std::numeric_limits<double>::epsilon();
                const double cond = std::max({1.0, std::abs(fa.log_rho()), std::abs(fb.log_rho())}) /
                                    std::min(fa.cos_theta(), fb.cos_theta());
                tally.check_within(w - k_half(fa, fb), 4.0 * eps * cond);
            }
            // semigroup law on representable points
            const DiscPoint zs = sample_disc(rng, 3.0);
            const double s = rng.uniform(0.0, 5.0), t = rng.uniform(0.0, 5.0);
            const OrbitPoint first = orbit(run.sg, zs, s);
            if (first.representable) {
                const OrbitPoint two = orbit(run.sg, first.disc(), t);
                const OrbitPoint one = orbit(run.sg, zs, s + t);
                const double err = std::abs(two.value - one.value);
                max_law = std::max(max_law, err);
                tally.check(-err);
            }
        }
    }
    return finish("basepoint", tally, seed,
                  {{"semigroup_law_max_error", max_law}, {"orbit_to_dw_distance_t1e12", max_dw}});
}

SuiteReport suite_conjugation(long long n, std::uint64_t seed, double tol) {
    Rng rng(seed);
    Tally tally{tol};
    std::map<std::string, double> details;
    const auto grid = default_grid();
    double empirical = 0.0, ratio = 0.0;
    for (const auto& run : run_examples(grid)) {
        double sup_here = 0.0;
        for (long long i = 0; i < n; ++i) {
            const DiscAutomorphism m(sample_disc(rng, 4.0), rng.uniform(-kPi, kPi));
            const KoenigsSemigroup conj = conjugate(run.sg, m);
            const auto other = sample_speeds(conj, grid);
            double sup = 0.0;
            for (std::size_t k = 0; k < grid.size(); ++k) {
                sup = std::max({sup, std::abs(run.speeds[k].v - other[k].v),
                                std::abs(run.speeds[k].v_o - other[k].v_o),
                                std::abs(run.speeds[k].v_T - other[k].v_T)});
            }
            const double bound = 4.0 * omega(m(DiscPoint{}), DiscPoint{}) + 4.0;
            tally.check(bound - sup);
            sup_here = std::max(sup_here, sup);
            ratio = std::max(ratio, sup / bound);
        }
        details["empirical_sup:" + run.example.label] = sup_here;
        empirical = std::max(empirical, sup_here);
    }
    details["empirical_sup"] = empirical;
    details["max_sup_over_bound"] = ratio;
    return finish("conjugation", tally, seed, details);
}

SuiteReport suite_comb(long long n, std::uint64_t seed, double tol) {
    Tally tally{tol};
    const int J = n >= 1 ? static_cast<int>(n) : 10;
    const CombConstruction cc = build_comb(GSpec::log1p(), ASpec::linear(), J);
    std::map<std::string, double> details;
    for (int j = 1; j <= cc.J(); ++j) tally.check(1.0 - cc.constraint(j));
    const auto ratios = verify_comb(cc);
    for (const auto& r : ratios) {
        tally.check(r.ratio - r.j / 4.0, r.ratio);
        tally.equal(r.restricted, r.restricted_closed_form);
        tally.check(r.restricted - r.j * r.g_value / 4.0, r.restricted);
        // the distance to the complement is a_{j+1} on [x_j, b_{j+1}]
        const double xj = cc.x[r.j - 1], bn = cc.b[r.j];
        for (int k = 0; k <= 8; ++k) {
            const double y = xj + (bn - xj) * k / 8.0;
            tally.equal(delta(cc.domain, {0.0, y}), cc.a[r.j]);
        }
        details["ratio_" + std::to_string(r.j)] = r.ratio;
    }
    const double growth = ratios.back().ratio / ratios.front().ratio;
    details["ratio_last_over_first"] = growth;
    if (J >= 10) tally.check(growth - 5.0);
    return finish("comb", tally, seed, details);
}

SuiteReport suite_nontangential(long long n, std::uint64_t seed, double tol) {
    Tally tally{tol};
    std::map<std::string, double> details;
    const auto grid = suite_grid(n);
    for (const auto& ex : built_examples()) {
        const KoenigsSemigroup sg = make_semigroup(ex.domain);
        const NontangentialReport rep = nontangential_report(sg, sg.base_model_point(), grid);
        details["ratio_at_tmax:" + ex.label] = rep.ratio_at_tmax;
        details["v_T_at_tmax:" + ex.label] = rep.v_T_at_tmax;
        details["ratio_bounded:" + ex.label] = rep.ratio_bounded ? 1.0 : 0.0;
        details["v_T_bounded:" + ex.label] = rep.v_T_bounded ? 1.0 : 0.0;
        tally.check(rep.agree ? 0.0 : -1.0);
        if (!rep.ratio_bounded) {
            tally.check(rep.ratio_at_tmax - 1e6);
            tally.check(rep.v_T_at_tmax - 5.0);
        }
    }
    return finish("nontangential", tally, seed, details);
}

using SuiteFn = std::function<SuiteReport(long long, std::uint64_t, double)>;

struct SuiteEntry {
    std::string name;
    long long default_samples;
    SuiteFn run;
    std::vector<std::string> coverage;
};

const std::vector<SuiteEntry>& registry() {
    static const std::vector<SuiteEntry> suites = {
        {"lemma_halfplane", 10000, suite_lemma_halfplane, {"k_half", "kappa", "path_length"}},
        {"pythagoras", 10000, suite_pythagoras,
         {"omega", "k_half", "project_to_radius", "dist_to_radius"}},
        {"contraction", 10000, suite_contraction,
         {"omega", "k_half", "project_to_radius", "cayley", "cayley_inv"}},
        {"split", 0, suite_split, {"build_domain", "to_halfplane", "classify", "sample_speeds"}},
        {"julia_tangent", 0, suite_julia_tangent, {"build_domain", "to_halfplane", "sample_speeds"}},
        {"surrogates", 0, suite_surrogates, {"surrogate_speeds", "sample_speeds"}},
        {"lower_bounds", 0, suite_lower_bounds,
         {"classify", "sample_speeds", "k_domain", "quasihyp_lower", "delta"}},
        {"betsakos", 0, suite_betsakos, {"classify", "sample_speeds"}},
        {"sector_asymptotics", 0, suite_sector_asymptotics, {"sample_speeds", "fit_asymptotic"}},
        {"basepoint", 4, suite_basepoint, {"orbit", "denjoy_wolff", "omega", "sample_speeds"}},
        {"conjugation", 4, suite_conjugation, {"sample_speeds", "omega"}},
        {"comb", 10, suite_comb, {"build_comb", "verify_comb", "quasihyp_lower", "delta", "build_domain"}},
        {"nontangential", 0, suite_nontangential, {"nontangential_ratio", "delta_pm", "sample_speeds"}},
    };
    return suites;
}

}  // namespace

nlohmann::ordered_json to_json(const SuiteReport& report) {
    nlohmann::ordered_json j;
    j["suite"] = report.suite;
    j["samples"] = report.samples;
    j["violations"] = report.violations;
    j["worst_margin"] = report.worst_margin;
    j["seed"] = report.seed;
    j["tol"] = report.tol;
    nlohmann::ordered_json details = nlohmann::ordered_json::object();
    for (const auto& [k, v] : report.details) details[k] = v;
    j["details"] = details;
    j["passed"] = report.passed();
    return j;
}

HalfPlanePoint halfplane_at_distance(double d, double phi) {
    const double e = std::exp(-2.0 * d);
    const double r = (1.0 - e) / (1.0 + e);
    const double one_minus_r = 2.0 * e / (1.0 + e);
    const double sech2 = 4.0 * e / ((1.0 + e) * (1.0 + e));
    const double s = std::sin(0.5 * phi);
    const double den = one_minus_r * one_minus_r + 4.0 * r * s * s;
    return HalfPlanePoint::from_complex({sech2 / den, 2.0 * r * std::sin(phi) / den});
}

HalfPlanePoint sample_halfplane(Rng& rng, double d_max) {
    const double d = rng.uniform(0.0, d_max);
    return halfplane_at_distance(d, rng.uniform(-kPi, kPi));
}

DiscPoint sample_disc(Rng& rng, double d_max) {
    const double d = rng.uniform(0.0, d_max);
    return DiscPoint(std::tanh(d) * unit(rng.uniform(-kPi, kPi)));
}

std::vector<BuiltExample> built_examples() {
    return {
        {"strip(pi/2)", build_domain(Strip{kHalfPi})},
        {"halfplane(0)", build_domain(HalfPlaneRight{})},
        {"sector(0,pi/4,pi/4)", build_domain(Sector{{}, kPi / 4, kPi / 4})},
        {"sector(0,pi,0)", build_domain(Sector{{}, kPi, 0.0})},
        {"koebe(0)", build_domain(Koebe{})},
    };
}

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& s : registry()) names.push_back(s.name);
    return names;
}

std::vector<std::string> suite_coverage(const std::string& suite) {
    for (const auto& s : registry())
        if (s.name == suite) return s.coverage;
    throw std::invalid_argument("unknown suite '" + suite + "'");
}

std::vector<std::string> public_operations() {
    return {"omega", "k_half", "kappa", "cayley", "cayley_inv", "project_to_radius",
            "dist_to_radius", "path_length", "build_domain", "to_halfplane", "delta",
            "delta_pm", "k_domain", "quasihyp_lower", "classify", "orbit", "denjoy_wolff",
            "sample_speeds", "surrogate_speeds", "fit_asymptotic", "nontangential_ratio",
            "build_comb", "verify_comb"};
}

SuiteReport run_suite(const std::string& name, long long samples, std::uint64_t seed, double tol) {
    for (const auto& s : registry()) {
        if (s.name != name) continue;
        if (samples < 0) throw std::invalid_argument("samples must be >= 0");
        if (!(tol >= 0.0)) throw std::invalid_argument("tol must be >= 0");
        return s.run(samples > 0 ? samples : s.default_samples, seed, tol);
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

// ---------------------------------------------------------------------------

std::vector<std::string> experiment_names() { return {"q1", "q2", "q3", "q4", "q5"}; }

nlohmann::ordered_json run_experiment(const std::string& name) {
    using json = nlohmann::ordered_json;
    json out;
    out["experiment"] = name;
    const auto grid = default_grid();
    if (name == "q1" || name == "q2" || name == "q3") {
        json rows = json::array();
        for (const auto& run : run_examples(grid)) {
            const Classification c = classify(run.example.domain);
            if (name == "q2" && c.type != SemigroupType::ParabolicPositiveStep) continue;
            if (name == "q3" && c.type == SemigroupType::Hyperbolic) continue;
            json row;
            row["domain"] = run.example.label;
            row["class"] = to_string(c.type);
            double sup = -kInf, lo = kInf;
            for (const auto& s : run.speeds) {
                const double e = s.v_T - 0.5 * std::log(s.t);
                sup = std::max(sup, e);
                lo = std::min(lo, e);
            }
            row["sup_vT_minus_half_log_t"] = sup;
            row["inf_vT_minus_half_log_t"] = lo;
            const SpeedSample& last = run.speeds.back();
            row["v_T_at_tmax"] = last.v_T;
            row["v_T_over_v_o_at_tmax"] = last.v_T / last.v_o;
            rows.push_back(row);
        }
        out["rows"] = rows;
    } else if (name == "q4") {
        // pairs (inner, outer) with inner contained in outer
        const std::vector<std::pair<DomainShape, DomainShape>> pairs = {
            {Sector{{}, kPi / 4, kPi / 4}, Koebe{}},
            {Sector{{}, kHalfPi, kHalfPi}, Koebe{}},
            {Sector{{}, kPi, 0.0}, Koebe{{-1.0, 0.0}}},
        };
        json rows = json::array();
        for (const auto& [inner, outer] : pairs) {
            const DomainSpec di = build_domain(inner), dout = build_domain(outer);
            const auto a = sample_speeds(make_semigroup(di), grid);
            const auto b = sample_speeds(make_semigroup(dout), grid);
            double lo = kInf;
            for (std::size_t k = 0; k < grid.size(); ++k) lo = std::min(lo, a[k].v_o - b[k].v_o);
            rows.push_back({{"inner", di.name()}, {"outer", dout.name()}, {"inf_vo_difference", lo}});
        }
        out["rows"] = rows;
    } else if (name == "q5") {
        const CombConstruction cc = build_comb(GSpec::log1p(), ASpec::linear(), 10);
        json rows = json::array();
        for (const auto& r : verify_comb(cc))
            rows.push_back({{"j", r.j}, {"t", cc.b[r.j]}, {"lower_over_g", r.ratio}});
        out["rows"] = rows;
    } else {
        throw std::invalid_argument("unknown experiment '" + name + "'");
    }
    return out;
}

}  // namespace hypspeed
