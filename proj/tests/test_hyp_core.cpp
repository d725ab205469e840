#include "hypspeed/hyp_core.hpp"
#include "hypspeed/quadrature.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace hypspeed;
using doctest::Approx;

TEST_CASE("disc distance of 0 and 1/2") {
    CHECK(omega(DiscPoint{}, DiscPoint({0.5, 0.0})) == Approx(0.5493061443340549).epsilon(1e-15));
    CHECK(omega(DiscPoint({0.3, -0.2}), DiscPoint({0.3, -0.2})) == 0.0);
}

TEST_CASE("half-plane distance on the axis and off it") {
    CHECK(k_half(Complex{1.0, 0.0}, Complex{1.0, 1.0}) ==
          Approx(0.48121182505960347).epsilon(1e-15));
    CHECK(k_half(Complex{1.0, 0.0}, Complex{std::exp(2.0), 0.0}) == Approx(1.0).epsilon(1e-15));
    CHECK(k_half(HalfPlanePoint::polar(-400.0, 0.0), HalfPlanePoint::polar(400.0, 0.0)) ==
          Approx(400.0).epsilon(1e-15));
}

TEST_CASE("disc and half-plane distances agree through the Cayley map") {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> u(-0.7, 0.7);
    for (int i = 0; i < 200; ++i) {
        const DiscPoint z({u(gen), u(gen)}), w({u(gen), u(gen)});
        CHECK(k_half(cayley(z), cayley(w)) == Approx(omega(z, w)).epsilon(1e-12));
    }
}

TEST_CASE("infinitesimal metric") {
    CHECK(kappa(Space::Disc, {0.0, 0.0}, {1.0, 0.0}) == 1.0);
    CHECK(kappa(Space::Disc, {0.5, 0.0}, {0.0, 1.0}) == Approx(1.0 / 0.75));
    CHECK(kappa(Space::HalfPlane, {1.0, 0.0}, {1.0, 0.0}) == 0.5);
    CHECK(kappa(Space::HalfPlane, {2.0, 5.0}, {0.0, 3.0}) == Approx(0.75));
    CHECK_THROWS_AS(kappa(Space::HalfPlane, {-1.0, 0.0}, {1.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(kappa(Space::Disc, {1.0, 0.0}, {1.0, 0.0}), std::domain_error);
}

TEST_CASE("path length of geodesic segments") {
    const Complex ray[2] = {{1.0, 0.0}, {std::exp(2.0), 0.0}};
    CHECK(path_length(Space::HalfPlane, ray) == Approx(1.0).epsilon(1e-12));
    const Complex seg[2] = {{0.0, 0.0}, {0.5, 0.0}};
    CHECK(path_length(Space::Disc, seg) == Approx(0.5493061443340549).epsilon(1e-12));
    const Complex bent[3] = {{0.0, 0.0}, {0.3, 0.3}, {0.5, 0.0}};
    CHECK(path_length(Space::Disc, bent) > omega(DiscPoint{}, DiscPoint({0.5, 0.0})));
}

TEST_CASE("Cayley transform") {
    CHECK(cayley(DiscPoint{}).log_rho() == 0.0);
    CHECK(cayley(DiscPoint{}).theta() == 0.0);
    const Complex i{0.0, 1.0};
    CHECK(std::abs(cayley_map(i) - i) < 1e-15);
    CHECK(std::abs(cayley_inv_map(cayley_map({0.2, -0.4})) - Complex{0.2, -0.4}) < 1e-15);
    const DiscPoint z({0.6, 0.1});
    CHECK(std::abs(cayley_inv(cayley(z)).value() - z.value()) < 1e-15);
    const HalfPlanePoint w = cayley_toward(z, i);
    CHECK(std::abs(w.to_complex() - cayley_map(-i * z.value())) < 1e-14);
}

TEST_CASE("points near the unit circle keep their distance to it") {
    const double eps = 1e-12;
    const DiscPoint z({1.0 - eps, 0.0});
    CHECK(one_minus_abs2(z.value()) == Approx(2.0 * eps - eps * eps).epsilon(1e-6));
    const HalfPlanePoint w = cayley(z);
    CHECK(log_one_minus_abs_cayley_inv(w) == Approx(std::log(eps)).epsilon(1e-6));
    const HalfPlanePoint far = HalfPlanePoint::polar(500.0, 0.3);
    CHECK(log_one_minus_abs_cayley_inv(far) ==
          Approx(std::log(2.0 * std::cos(0.3)) - 500.0).epsilon(1e-12));
    CHECK_THROWS_AS(DiscPoint({1.0, 0.0}), std::domain_error);
}

TEST_CASE("log-polar points") {
    const HalfPlanePoint w = HalfPlanePoint::from_complex({3.0, 4.0});
    CHECK(w.log_rho() == Approx(std::log(5.0)));
    CHECK(w.cos_theta() == Approx(0.6));
    CHECK(w.edge_gap() == Approx(kHalfPi - std::atan2(4.0, 3.0)));
    const HalfPlanePoint g = HalfPlanePoint::from_gap(0.0, 1e-300, true);
    CHECK(g.cos_theta() == Approx(1e-300));
    CHECK(g.theta() < 0.0);
    CHECK(std::abs(w.reciprocal().to_complex() - 1.0 / Complex{3.0, 4.0}) < 1e-15);
    CHECK(log_abs_shift(w, 1.0) == Approx(std::log(std::abs(Complex{4.0, 4.0}))));
    CHECK(log_abs_shift(w, -1.0) == Approx(std::log(std::abs(Complex{2.0, 4.0}))));
    CHECK_THROWS_AS(HalfPlanePoint::polar(0.0, kHalfPi), std::domain_error);
    CHECK_THROWS_AS(HalfPlanePoint::from_complex({0.0, 1.0}), std::domain_error);
}

TEST_CASE("projection onto a diameter matches a golden-section search") {
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> ang(-kPi, kPi), rad(0.0, 0.95);
    for (int i = 0; i < 100; ++i) {
        const Complex z = std::polar(rad(gen), ang(gen));
        const Complex tau = unit(ang(gen));
        const RadialGeodesic geo(tau);
        const DiscPoint p = project_to_radius(DiscPoint(z), geo);
        CHECK(std::abs(p.value() - oracle::golden_projection(z, tau)) < 1e-6);
        CHECK(dist_to_radius(DiscPoint(z), geo) == Approx(omega(DiscPoint(z), p)).epsilon(1e-12));
    }
    CHECK(std::abs(project_to_radius(DiscPoint({0.0, 0.5}), RadialGeodesic(1.0)).value()) < 1e-15);
}

TEST_CASE("distance to the positive axis") {
    for (double theta : {0.0, 0.1, -0.7, 1.2, 1.5}) {
        const HalfPlanePoint w = HalfPlanePoint::polar(3.0, theta);
        CHECK(dist_to_positive_axis(w) == Approx(oracle::axis_distance(theta)).epsilon(1e-13));
        CHECK(project_to_positive_axis(w).log_rho() == 3.0);
        CHECK(project_to_positive_axis(w).theta() == 0.0);
    }
    const HalfPlanePoint edge = HalfPlanePoint::from_gap(10.0, 1e-200, false);
    CHECK(dist_to_positive_axis(edge) == Approx(0.5 * std::log(2.0e200)).epsilon(1e-12));
}

TEST_CASE("disc automorphisms") {
    const DiscAutomorphism id = DiscAutomorphism::identity();
    CHECK(std::abs(id.apply({0.3, 0.2}) - Complex{0.3, 0.2}) < 1e-16);
    const DiscAutomorphism m(DiscPoint({0.4, -0.3}), 0.7);
    CHECK(std::abs(m.apply({0.4, -0.3})) < 1e-16);
    const Complex z{-0.2, 0.5};
    CHECK(std::abs(m.apply_inverse(m.apply(z)) - z) < 1e-15);
    const DiscAutomorphism r = DiscAutomorphism::rotation(1.0);
    const DiscAutomorphism c = m.compose(r);
    CHECK(std::abs(c.apply(z) - m.apply(r.apply(z))) < 1e-15);
    const DiscPoint a({0.1, 0.1}), b({-0.6, 0.2});
    CHECK(omega(m(a), m(b)) == Approx(omega(a, b)).epsilon(1e-13));
    CHECK(std::abs(unit(kHalfPi) - Complex{0.0, 1.0}) == 0.0);
}

TEST_CASE("adaptive Gauss-Legendre") {
    const auto r = adaptive_gauss_legendre([](double x) { return std::exp(x); }, 0.0, 1.0, 1e-14);
    CHECK(r.converged);
    CHECK(r.value == Approx(std::exp(1.0) - 1.0).epsilon(1e-14));
    CHECK(composite_gauss_legendre([](double x) { return x * x * x; }, -1.0, 2.0, 1) ==
          Approx(3.75).epsilon(1e-14));
}
