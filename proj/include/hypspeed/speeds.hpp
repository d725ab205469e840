#pragma once

// Total, orthogonal and tangential speeds of semigroup orbits, their
// Euclidean surrogates, asymptotic fits and the non-tangentiality ratio.

#include "hypspeed/semigroups.hpp"

#include <span>
#include <string>
#include <vector>

namespace hypspeed {

struct SpeedSample {
    double t = 0.0;
    double v = 0.0;
    double v_o = 0.0;
    double v_T = 0.0;
    double log_rho = 0.0;
    double theta = 0.0;
};

/// Speeds of a point given in the half-plane frame (0 at 1, the
/// Denjoy-Wolff point at infinity).
SpeedSample speeds_at(const HalfPlanePoint& frame, double t = 0.0);

/// Speeds of the orbit of 0. Throws UnsupportedError for a comb.
std::vector<SpeedSample> sample_speeds(const KoenigsSemigroup& sg, std::span<const double> grid);
/// Speeds (still measured from 0 and the diameter through the Denjoy-Wolff
/// point) of the orbit starting at z.
std::vector<SpeedSample> sample_speeds_from(const KoenigsSemigroup& sg, DiscPoint z,
                                            std::span<const double> grid);

/// `points` samples on [t_min, t_max]: geometric when t_min > 0, linear otherwise.
std::vector<double> make_grid(double t_min, double t_max, int points);
std::vector<double> default_grid();

struct SurrogateSample {
    double t = 0.0;
    double s_total = 0.0;
    double s_orth = 0.0;
    double s_tang = 0.0;
    double dev_total = 0.0;  // |v - s_total|
    double dev_orth = 0.0;   // |v_o - s_orth|
    double dev_tang = 0.0;   // |v_T - s_tang|
    bool pre_threshold = false;
};

struct SurrogateReport {
    double t0 = 0.0;  // first grid time from which Re(conj(tau) eta(t)) >= 0 holds
    std::vector<SurrogateSample> samples;
};

/// Surrogates 1/2 log 1/(1-|eta|), 1/2 log 1/|tau-eta| and their difference
/// for eta = phi_t(0); grid must be sorted.
SurrogateReport surrogate_speeds(const KoenigsSemigroup& sg, std::span<const double> grid);

enum class Basis { LogT, T };
enum class Series { V, VO, VT };

struct AsymptoticFit {
    Basis basis = Basis::LogT;
    Series series = Series::V;
    double coefficient = 0.0;
    double intercept = 0.0;
    double sup_residual = 0.0;  // max |series - coefficient * basis| on the window
    double t_lo = 0.0;
    double t_hi = 0.0;
    int samples = 0;
};

/// Least-squares slope (with intercept) over samples with t in [t_lo, t_hi].
/// Throws std::invalid_argument with fewer than 20 samples in the window.
AsymptoticFit fit_asymptotic(std::span<const SpeedSample> samples, Series series, Basis basis,
                             double t_lo, double t_hi);

double series_value(const SpeedSample& s, Series series);
std::string to_string(Basis basis);
std::string to_string(Series series);
Basis basis_from_string(const std::string& name);
Series series_from_string(const std::string& name);

/// min{t, delta_-(p+it)} / min{t, delta_+(p+it)} for the image domain of sg.
double nontangential_ratio(const KoenigsSemigroup& sg, Complex p, double t);

struct NontangentialReport {
    double t_max = 0.0;
    double ratio_at_tmax = 0.0;
    double v_T_at_tmax = 0.0;
    double ratio_sup = 0.0;  // sup of max(ratio, 1/ratio) over the grid
    double v_T_sup = 0.0;
    bool ratio_bounded = true;
    bool v_T_bounded = true;
    bool agree = true;
};

/// Tail verdicts on a grid ending at t_max: the ratio is judged unbounded when
/// max(ratio, 1/ratio) grows by more than a factor 10 from t_max/100 to
/// t_max, the tangential speed when it grows by more than 1 on that span.
NontangentialReport nontangential_report(const KoenigsSemigroup& sg, Complex p,
                                         std::span<const double> grid);

}  // namespace hypspeed
