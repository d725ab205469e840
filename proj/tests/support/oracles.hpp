#pragma once

// Independent reference computations used only by the tests.

#include "hypspeed/hyp_core.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace oracle {

using hypspeed::Complex;

/// argmin over r in (-1, 1) of omega(z, r*tau) by golden-section search.
inline Complex golden_projection(Complex z, Complex tau, int iterations = 200) {
    tau /= std::abs(tau);
    auto f = [&](double r) {
        return hypspeed::omega(hypspeed::DiscPoint(z), hypspeed::DiscPoint(r * tau));
    };
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double lo = -1.0 + 1e-12, hi = 1.0 - 1e-12;
    double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iterations; ++i) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = f(x2);
        }
    }
    return 0.5 * (lo + hi) * tau;
}

/// Euclidean distance from p to the closed ray {origin + s*dir : s >= 0}.
inline double distance_to_ray(Complex p, Complex origin, Complex dir) {
    dir /= std::abs(dir);
    const double s = std::max(0.0, (std::conj(dir) * (p - origin)).real());
    return std::abs(p - (origin + s * dir));
}

struct Slit {
    double a;
    double b;
};

/// Distance to the union of the slits {Re z = +-a, Im z <= b}, one ray at a time.
inline double comb_delta(const std::vector<Slit>& slits, Complex p) {
    double d = INFINITY;
    for (const auto& s : slits) {
        d = std::min(d, distance_to_ray(p, {s.a, s.b}, {0.0, -1.0}));
        d = std::min(d, distance_to_ray(p, {-s.a, s.b}, {0.0, -1.0}));
    }
    return d;
}

/// Tangential distance of e^{i theta} to the positive axis: 1/2 log(sec + tan).
inline double axis_distance(double theta) {
    const double t = std::abs(theta);
    return 0.5 * std::log((1.0 + std::sin(t)) / std::cos(t));
}

}  // namespace oracle
