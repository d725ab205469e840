#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace hypspeed {

/// 16-point Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre16 {
    std::array<double, 16> nodes{};
    std::array<double, 16> weights{};
};

const GaussLegendre16& gauss_legendre16();

/// Composite 16-point rule with `panels` equal panels.
template <class F>
double composite_gauss_legendre(F&& f, double a, double b, int panels) {
    const auto& rule = gauss_legendre16();
    const double h = (b - a) / panels;
    double sum = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * h;
        double panel = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            panel += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
        sum += panel * 0.5 * h;
    }
    return sum;
}

struct QuadratureResult {
    double value = 0.0;
    int panels = 0;
    bool converged = false;
};

/// Doubles the panel count until two successive composite sums agree to
/// `rel_tol`. Throws std::runtime_error if `max_panels` is reached.
template <class F>
QuadratureResult adaptive_gauss_legendre(F&& f, double a, double b,
                                         double rel_tol = 1e-9,
                                         int max_panels = 1 << 20) {
    if (a == b) return {0.0, 0, true};
    int panels = 1;
    double prev = composite_gauss_legendre(f, a, b, panels);
    while (panels < max_panels) {
        panels *= 2;
        const double cur = composite_gauss_legendre(f, a, b, panels);
        if (std::abs(cur - prev) <= rel_tol * std::abs(cur) || cur == prev)
            return {cur, panels, true};
        prev = cur;
    }
    throw std::runtime_error("adaptive_gauss_legendre: no convergence");
}

}  // namespace hypspeed
