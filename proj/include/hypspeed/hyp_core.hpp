#pragma once

// Hyperbolic metric, projections and automorphisms in the unit disc and the
// right half-plane.
//
// Half-plane points are carried in log-polar form so that orbit points with
// astronomically large or small modulus remain representable. Besides the
// angle itself every HalfPlanePoint keeps its angular distance to the
// imaginary axis, computed from Cartesian data whenever that is available,
// so cos(theta) stays accurate all the way to the boundary.

#include <complex>
#include <span>
#include <stdexcept>

namespace hypspeed {

using Complex = std::complex<double>;
using ComplexPoint = Complex;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kHalfPi = kPi / 2;
inline constexpr double kLog2 = 0.69314718055994530942;

/// exp(i*angle), snapped to exact values at multiples of pi/2.
Complex unit(double angle);

/// 1 - |z|^2 with compensated summation; exact up to one rounding for the
/// stored value of z.
double one_minus_abs2(Complex z);

/// Point of the open unit disc.
class DiscPoint {
public:
    DiscPoint() = default;
    explicit DiscPoint(Complex value);  // throws std::domain_error if |value| >= 1

    Complex value() const noexcept { return value_; }
    double real() const noexcept { return value_.real(); }
    double imag() const noexcept { return value_.imag(); }

private:
    Complex value_{0.0, 0.0};
};

/// Point rho*e^{i theta} of the right half-plane, stored as (log rho, theta).
class HalfPlanePoint {
public:
    HalfPlanePoint() = default;

    /// throws std::domain_error unless |theta| < pi/2 and both are finite
    static HalfPlanePoint polar(double log_rho, double theta);
    /// throws std::domain_error unless Re w > 0
    static HalfPlanePoint from_complex(Complex w);
    /// From Cartesian parts given as (log Re w, Im w / Re w); for points whose
    /// real part underflows.
    static HalfPlanePoint from_log_real(double log_re, double im_over_re);
    /// Angle given through its distance `gap` to pi/2 and its sign.
    static HalfPlanePoint from_gap(double log_rho, double gap, bool negative);

    double log_rho() const noexcept { return log_rho_; }
    double theta() const noexcept { return theta_; }
    /// pi/2 - |theta|, accurate near the imaginary axis
    double edge_gap() const noexcept { return gap_; }
    double cos_theta() const;
    double log_cos_theta() const;
    double sin_theta() const;

    /// rho*e^{i theta}; overflows for log_rho > ~709
    Complex to_complex() const;

    HalfPlanePoint reciprocal() const noexcept;

private:
    double log_rho_ = 0.0;
    double theta_ = 0.0;
    double gap_ = kHalfPi;
};

/// Diameter r -> r*tau of the disc.
class RadialGeodesic {
public:
    RadialGeodesic() = default;
    explicit RadialGeodesic(Complex tau);  // normalizes; throws on tau == 0

    Complex direction() const noexcept { return tau_; }

private:
    Complex tau_{1.0, 0.0};
};

/// M(z) = e^{i phase} (a - z) / (1 - conj(a) z).
class DiscAutomorphism {
public:
    DiscAutomorphism() = default;
    DiscAutomorphism(DiscPoint a, double phase);

    static DiscAutomorphism identity();
    static DiscAutomorphism rotation(double angle);

    DiscPoint a() const noexcept { return a_; }
    double phase() const noexcept { return phase_; }

    Complex apply(Complex z) const;
    Complex apply_inverse(Complex w) const;
    DiscPoint operator()(DiscPoint z) const;
    DiscPoint inverse(DiscPoint w) const;

    /// (this o inner)(z) = this(inner(z))
    DiscAutomorphism compose(const DiscAutomorphism& inner) const;

private:
    DiscPoint a_{};
    double phase_ = kPi;  // a = 0, phase = pi is the identity
};

enum class Space { Disc, HalfPlane };

// ---------------------------------------------------------------------------
// Distances

double omega(DiscPoint z, DiscPoint w);
double k_half(const HalfPlanePoint& w1, const HalfPlanePoint& w2);
double k_half(Complex w1, Complex w2);

/// Infinitesimal metric; throws std::domain_error off the open space.
double kappa(Space space, Complex point, Complex vector);

// ---------------------------------------------------------------------------
// Cayley transform z -> (1+z)/(1-z)

HalfPlanePoint cayley(DiscPoint z);
/// C(conj(tau) z): the frame in which the diameter through tau is (0, +inf).
HalfPlanePoint cayley_toward(DiscPoint z, Complex tau);
/// throws std::domain_error when the preimage rounds onto the unit circle
DiscPoint cayley_inv(const HalfPlanePoint& w);
Complex cayley_map(Complex z);
Complex cayley_inv_map(Complex w);

/// log(1 - |C^{-1}(w)|) without cancellation.
double log_one_minus_abs_cayley_inv(const HalfPlanePoint& w);
/// log|w + s| for s = +1 or -1 without overflow.
double log_abs_shift(const HalfPlanePoint& w, double s);

// ---------------------------------------------------------------------------
// Projections onto diameters

DiscPoint project_to_radius(DiscPoint z, const RadialGeodesic& geo);
double dist_to_radius(DiscPoint z, const RadialGeodesic& geo);

/// Half-plane picture with the geodesic (0, +inf): the projection is rho.
HalfPlanePoint project_to_positive_axis(const HalfPlanePoint& w);
double dist_to_positive_axis(const HalfPlanePoint& w);

// ---------------------------------------------------------------------------

/// Hyperbolic length of a polyline by composite 16-point Gauss-Legendre
/// quadrature on `panels` panels per segment.
double path_length(Space space, std::span<const Complex> polyline, int panels = 64);

}  // namespace hypspeed
