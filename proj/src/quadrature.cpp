#include "hypspeed/quadrature.hpp"

namespace hypspeed {

namespace {

GaussLegendre16 build_rule() {
    GaussLegendre16 rule;
    constexpr int n = 16;
    for (int i = 0; i < n / 2; ++i) {
        // Newton iteration on P_n from the Chebyshev-like initial guess
        double z = std::cos(3.14159265358979323846 * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-16) break;
        }
        rule.nodes[i] = -z;
        rule.nodes[n - 1 - i] = z;
        rule.weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.weights[n - 1 - i] = rule.weights[i];
    }
    return rule;
}

}  // namespace

const GaussLegendre16& gauss_legendre16() {
    static const GaussLegendre16 rule = build_rule();
    return rule;
}

}  // namespace hypspeed
