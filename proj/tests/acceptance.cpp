#include "hypspeed/verify.hpp"
#include "support/oracles.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

using namespace hypspeed;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
    std::printf("[%s] %d %s: %s\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::string describe(const SuiteReport& r) {
    std::ostringstream os;
    os << r.suite << " samples=" << r.samples << " violations=" << r.violations
       << " worst_margin=" << r.worst_margin;
    return os.str();
}

bool within(double value, double target, double tol) { return std::abs(value - target) <= tol; }

KoenigsSemigroup make(const DomainShape& shape) { return make_semigroup(build_domain(shape)); }

void pythagoras() {
    const SuiteReport r = run_suite("pythagoras", 10000, 42, 1e-9);
    const double gap = r.details.at("min_upper_gap");
    std::ostringstream os;
    os << describe(r) << " min_upper_gap=" << gap;
    report(1, "pythagoras sandwich", r.passed() && gap <= 0.05, os.str());
}

void lemma() {
    const SuiteReport r = run_suite("lemma_halfplane", 10000, 42, 1e-9);
    const double err = r.details.at("path_length_max_error");
    std::ostringstream os;
    os << describe(r) << " path_length_max_error=" << err;
    report(2, "half-plane lemma items 1-6", r.passed() && err <= 1e-5, os.str());
}

void split() {
    const SuiteReport a = run_suite("split", 512, 42, 1e-9);
    const SuiteReport b = run_suite("julia_tangent", 512, 42, 1e-9);
    report(3, "speed split and tangential bound", a.passed() && b.passed(),
           describe(a) + "; " + describe(b));
}

void surrogates() {
    const SuiteReport r = run_suite("surrogates", 512, 42, 1e-9);
    report(4, "surrogate bounds past t0", r.passed(), describe(r));
}

void asymptotics() {
    const auto grid = default_grid();
    const double lo = 1e6, hi = 1e8;
    std::ostringstream os;
    bool ok = true;
    auto fit = [&](const std::vector<SpeedSample>& s, Series series) {
        return fit_asymptotic(s, series, Basis::LogT, lo, hi).coefficient;
    };

    const auto koebe = sample_speeds(make(Koebe{}), grid);
    double sup_vt = 0.0;
    for (const auto& s : koebe) sup_vt = std::max(sup_vt, s.v_T);
    const double kv = fit(koebe, Series::V);
    ok = ok && within(kv, 0.25, 0.02) && sup_vt < 3.0;
    os << "koebe v=" << kv << " sup_vT=" << sup_vt;

    const double svo = fit(sample_speeds(make(Sector{{}, kPi / 4, kPi / 4}), grid), Series::VO);
    ok = ok && within(svo, 1.0, 0.02);
    os << "; sector(pi/4,pi/4) v_o=" << svo;

    const auto half = sample_speeds(make(Sector{{}, kPi, 0.0}), grid);
    const double hv = fit(half, Series::V), hvo = fit(half, Series::VO), hvt = fit(half, Series::VT);
    ok = ok && within(hv, 1.0, 0.03) && within(hvo, 0.5, 0.03) && within(hvt, 0.5, 0.03);
    os << "; sector(pi,0) v=" << hv << " v_o=" << hvo << " v_T=" << hvt;

    double worst_ratio = 0.0;
    for (const auto& s : sample_speeds(make(Strip{kHalfPi}), grid))
        if (s.t >= lo) worst_ratio = std::max(worst_ratio, std::abs(s.v / s.t - 1.0));
    ok = ok && worst_ratio <= 0.01;
    os << "; strip max|v/t-1|=" << worst_ratio;

    double sup_log = 0.0;
    for (const auto& s : sample_speeds(make(HalfPlaneRight{}), grid))
        if (s.t >= lo) sup_log = std::max(sup_log, std::abs(s.v - std::log(s.t)));
    ok = ok && sup_log < 2.0;
    os << "; halfplane sup|v-log t|=" << sup_log;

    const SuiteReport r = run_suite("sector_asymptotics", 0, 42, 1e-9);
    ok = ok && r.passed();
    report(5, "asymptotic constants", ok, os.str() + "; " + describe(r));
}

void lower_bounds() {
    const SuiteReport a = run_suite("lower_bounds", 512, 42, 1e-9);
    const SuiteReport b = run_suite("betsakos", 512, 42, 1e-9);
    report(6, "class lower bounds and orthogonal bounds", a.passed() && b.passed(),
           describe(a) + "; " + describe(b));
}

void projection() {
    Rng rng(42);
    double worst = 0.0;
    long long bad_contraction = 0;
    for (int i = 0; i < 1000; ++i) {
        const DiscPoint z = sample_disc(rng, 12.0);
        const DiscPoint w = sample_disc(rng, 12.0);
        const Complex tau = unit(rng.uniform(-kPi, kPi));
        const RadialGeodesic geo(tau);
        const DiscPoint pz = project_to_radius(z, geo);
        worst = std::max(worst, std::abs(pz.value() - oracle::golden_projection(z.value(), tau)));
        const double before = omega(z, w), after = omega(pz, project_to_radius(w, geo));
        if (after > before + 1e-9 * std::max(1.0, before)) ++bad_contraction;
    }
    const SuiteReport r = run_suite("contraction", 10000, 42, 1e-9);
    std::ostringstream os;
    os << "golden-section max error=" << worst << " contraction violations=" << bad_contraction
       << "; " << describe(r);
    report(7, "projection oracle", worst <= 1e-6 && bad_contraction == 0 && r.passed(), os.str());
}

void comb() {
    const CombConstruction cc = build_comb(GSpec::log1p(), ASpec::linear(), 10);
    bool ok = cc.J() == 10;
    double worst_constraint = 0.0;
    for (int j = 1; j <= cc.J(); ++j) {
        worst_constraint = std::max(worst_constraint, cc.constraint(j));
        ok = ok && cc.constraint(j) < 1.0;
    }
    const auto ratios = verify_comb(cc);
    double worst_slack = INFINITY;
    for (const auto& r : ratios) {
        worst_slack = std::min(worst_slack, r.ratio - r.j / 4.0);
        ok = ok && r.ratio >= r.j / 4.0 - 1e-9;
    }
    const double growth = ratios.back().ratio / ratios.front().ratio;
    ok = ok && growth > 5.0;
    std::ostringstream os;
    os << "max constraint=" << worst_constraint << " min(ratio_j - j/4)=" << worst_slack
       << " ratio_10/ratio_1=" << growth;
    report(8, "comb construction", ok, os.str());
}

void nontangential() {
    const auto grid = default_grid();
    struct Case {
        const char* label;
        DomainShape shape;
        bool bounded;
    };
    const Case cases[] = {{"sector(0,pi/4,pi/4)", Sector{{}, kPi / 4, kPi / 4}, true},
                          {"koebe(0)", Koebe{}, true},
                          {"sector(0,pi,0)", Sector{{}, kPi, 0.0}, false},
                          {"halfplane(0)", HalfPlaneRight{}, false}};
    bool ok = true;
    std::ostringstream os;
    for (const auto& c : cases) {
        const KoenigsSemigroup sg = make(c.shape);
        const NontangentialReport r = nontangential_report(sg, sg.base_model_point(), grid);
        bool good = r.agree && r.ratio_bounded == c.bounded && r.v_T_bounded == c.bounded;
        if (!c.bounded) good = good && r.t_max == 1e8 && r.ratio_at_tmax > 1e6 && r.v_T_at_tmax > 5.0;
        ok = ok && good;
        os << c.label << " ratio(t_max)=" << r.ratio_at_tmax << " v_T(t_max)=" << r.v_T_at_tmax
           << (r.ratio_bounded ? " bounded" : " unbounded") << "; ";
    }
    const SuiteReport r = run_suite("nontangential", 0, 42, 1e-9);
    ok = ok && r.passed();
    report(9, "non-tangentiality cross-check", ok, os.str() + describe(r));
}

}  // namespace

int main() {
    pythagoras();
    lemma();
    split();
    surrogates();
    asymptotics();
    lower_bounds();
    projection();
    comb();
    nontangential();
    std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
