#include "hypspeed/hyp_core.hpp"

#include "hypspeed/quadrature.hpp"

#include <cmath>
#include <string>

namespace hypspeed {

namespace {

// Error-free product: a*a = hi + lo.
inline void two_square(double a, double& hi, double& lo) {
    hi = a * a;
    lo = std::fma(a, a, -hi);
}

}  // namespace

Complex unit(double angle) {
    const double q = angle / kHalfPi;
    const double k = std::round(q);
    if (std::abs(q - k) < 1e-14) {
        switch (((static_cast<long long>(k) % 4) + 4) % 4) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            default: return {0.0, -1.0};
        }
    }
    return {std::cos(angle), std::sin(angle)};
}

double one_minus_abs2(Complex z) {
    double xh, xl, yh, yl;
    two_square(z.real(), xh, xl);
    two_square(z.imag(), yh, yl);
    if (xh < yh) {
        std::swap(xh, yh);
        std::swap(xl, yl);
    }
    // 1 - xh is exact for xh in [0.5, 2]; otherwise there is no cancellation.
    return ((1.0 - xh) - yh) - (xl + yl);
}

// ---------------------------------------------------------------------------

DiscPoint::DiscPoint(Complex value) : value_(value) {
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
        throw std::domain_error("DiscPoint: non-finite coordinates");
    if (!(one_minus_abs2(value) > 0.0))
        throw std::domain_error("DiscPoint: |z| >= 1");
}

HalfPlanePoint HalfPlanePoint::polar(double log_rho, double theta) {
    if (!std::isfinite(log_rho) || !std::isfinite(theta))
        throw std::domain_error("HalfPlanePoint: non-finite coordinates");
    if (!(std::abs(theta) < kHalfPi))
        throw std::domain_error("HalfPlanePoint: |theta| >= pi/2");
    HalfPlanePoint p;
    p.log_rho_ = log_rho;
    p.theta_ = theta;
    p.gap_ = kHalfPi - std::abs(theta);
    return p;
}

HalfPlanePoint HalfPlanePoint::from_complex(Complex w) {
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
        throw std::domain_error("HalfPlanePoint: non-finite coordinates");
    if (!(w.real() > 0.0)) throw std::domain_error("HalfPlanePoint: Re w <= 0");
    HalfPlanePoint p;
    p.log_rho_ = std::log(std::abs(w));
    p.theta_ = std::atan2(w.imag(), w.real());
    p.gap_ = std::atan2(w.real(), std::abs(w.imag()));
    return p;
}

HalfPlanePoint HalfPlanePoint::from_log_real(double log_re, double im_over_re) {
    if (!std::isfinite(log_re) || !std::isfinite(im_over_re))
        throw std::domain_error("HalfPlanePoint: non-finite coordinates");
    HalfPlanePoint p;
    const double q = std::abs(im_over_re);
    p.log_rho_ = log_re + (q > 1e150 ? std::log(q) : 0.5 * std::log1p(q * q));
    p.theta_ = std::atan(im_over_re);
    p.gap_ = std::atan2(1.0, q);
    return p;
}

HalfPlanePoint HalfPlanePoint::from_gap(double log_rho, double gap, bool negative) {
    if (!std::isfinite(log_rho) || !(gap > 0.0) || !(gap <= kHalfPi))
        throw std::domain_error("HalfPlanePoint: angle gap outside (0, pi/2]");
    HalfPlanePoint p;
    p.log_rho_ = log_rho;
    p.gap_ = gap;
    p.theta_ = negative ? -(kHalfPi - gap) : (kHalfPi - gap);
    return p;
}

double HalfPlanePoint::cos_theta() const { return std::sin(gap_); }
double HalfPlanePoint::log_cos_theta() const { return std::log(std::sin(gap_)); }
double HalfPlanePoint::sin_theta() const {
    if (gap_ > 0.25 * kPi) return std::sin(theta_);
    const double s = std::cos(gap_);
    return theta_ < 0.0 ? -s : s;
}

Complex HalfPlanePoint::to_complex() const {
    const double rho = std::exp(log_rho_);
    return {rho * cos_theta(), rho * sin_theta()};
}

HalfPlanePoint HalfPlanePoint::reciprocal() const noexcept {
    HalfPlanePoint p = *this;
    p.log_rho_ = -log_rho_;
    p.theta_ = -theta_;
    return p;
}

RadialGeodesic::RadialGeodesic(Complex tau) {
    const double m = std::abs(tau);
    if (!(m > 0.0) || !std::isfinite(m))
        throw std::invalid_argument("RadialGeodesic: direction must be nonzero");
    tau_ = tau / m;
}

// ---------------------------------------------------------------------------

DiscAutomorphism::DiscAutomorphism(DiscPoint a, double phase) : a_(a), phase_(phase) {}

DiscAutomorphism DiscAutomorphism::identity() { return {}; }

DiscAutomorphism DiscAutomorphism::rotation(double angle) {
    return DiscAutomorphism(DiscPoint{}, angle + kPi);
}

Complex DiscAutomorphism::apply(Complex z) const {
    const Complex a = a_.value();
    return unit(phase_) * (a - z) / (1.0 - std::conj(a) * z);
}

Complex DiscAutomorphism::apply_inverse(Complex w) const {
    const Complex a = a_.value();
    const Complex u = std::conj(unit(phase_)) * w;
    return (a - u) / (1.0 - std::conj(a) * u);
}

DiscPoint DiscAutomorphism::operator()(DiscPoint z) const { return DiscPoint(apply(z.value())); }
DiscPoint DiscAutomorphism::inverse(DiscPoint w) const { return DiscPoint(apply_inverse(w.value())); }

DiscAutomorphism DiscAutomorphism::compose(const DiscAutomorphism& inner) const {
    // The composite N vanishes at N^{-1}(0) = inner^{-1}(this^{-1}(0)).
    const Complex a = inner.apply_inverse(a_.value());
    const double m = std::abs(a);
    const Complex z0 = m > 0.25 ? -0.5 * a / m : Complex{0.5, 0.0};
    const Complex nz0 = apply(inner.apply(z0));
    const Complex e = nz0 * (1.0 - std::conj(a) * z0) / (a - z0);
    return DiscAutomorphism(DiscPoint(a), std::arg(e));
}

// ---------------------------------------------------------------------------

double omega(DiscPoint z, DiscPoint w) {
    const Complex zc = z.value(), wc = w.value();
    const double num = std::abs(zc - wc);
    if (num == 0.0) return 0.0;
    const double den = std::abs(1.0 - std::conj(zc) * wc);
    const double r = num / den;
    if (r < 0.5) return std::atanh(r);
    // 1 - |T|^2 = (1-|z|^2)(1-|w|^2) / |1 - conj(z) w|^2
    const double log_gap = std::log(one_minus_abs2(zc)) + std::log(one_minus_abs2(wc)) -
                           2.0 * std::log(den);
    return std::log1p(std::min(r, 1.0)) - 0.5 * log_gap;
}

double k_half(const HalfPlanePoint& w1, const HalfPlanePoint& w2) {
    const double m = std::max(w1.log_rho(), w2.log_rho());
    const double l1 = w1.log_rho() - m, l2 = w2.log_rho() - m;
    const double s1 = std::exp(l1), s2 = std::exp(l2);
    const double c1 = w1.cos_theta(), c2 = w2.cos_theta();
    const double shared_im = s1 * w1.sin_theta() - s2 * w2.sin_theta();
    const double diff = std::hypot(s1 * c1 - s2 * c2, shared_im);
    const double sum = std::hypot(s1 * c1 + s2 * c2, shared_im);
    if (diff == 0.0) return 0.0;
    const double r = diff / sum;
    if (r < 0.5) return std::atanh(r);
    // 1 - |T|^2 = 4 Re w1 Re w2 / |w1 + conj(w2)|^2, evaluated in logs so
    // extreme modulus ratios do not cancel.
    const double log_gap = std::log(4.0) + l1 + w1.log_cos_theta() + l2 + w2.log_cos_theta() -
                           2.0 * std::log(sum);
    return std::log1p(std::min(r, 1.0)) - 0.5 * log_gap;
}

double k_half(Complex w1, Complex w2) {
    return k_half(HalfPlanePoint::from_complex(w1), HalfPlanePoint::from_complex(w2));
}

double kappa(Space space, Complex point, Complex vector) {
    if (space == Space::Disc) {
        const double g = one_minus_abs2(point);
        if (!(g > 0.0)) throw std::domain_error("kappa: point not inside the disc");
        return std::abs(vector) / g;
    }
    if (!(point.real() > 0.0)) throw std::domain_error("kappa: point not inside the half-plane");
    return std::abs(vector) / (2.0 * point.real());
}

// ---------------------------------------------------------------------------

Complex cayley_map(Complex z) { return (1.0 + z) / (1.0 - z); }
Complex cayley_inv_map(Complex w) { return (w - 1.0) / (w + 1.0); }

HalfPlanePoint cayley(DiscPoint z) {
    const Complex zc = z.value();
    const double dx = 1.0 - zc.real(), dy = -zc.imag();
    const double d2 = dx * dx + dy * dy;
    // Re w = (1 - |z|^2) / |1 - z|^2, Im w = 2 Im z / |1 - z|^2
    return HalfPlanePoint::from_complex({one_minus_abs2(zc) / d2, 2.0 * zc.imag() / d2});
}

DiscPoint cayley_inv(const HalfPlanePoint& w) {
    if (std::abs(w.log_rho()) > 700.0)
        throw std::domain_error("cayley_inv: preimage not representable inside the disc");
    // w - 1 without cancellation near w = 1
    const double em1 = std::expm1(w.log_rho());
    const double half = std::sin(0.5 * w.theta());
    const Complex num{em1 * w.cos_theta() - 2.0 * half * half, std::exp(w.log_rho()) * w.sin_theta()};
    return DiscPoint(num / (w.to_complex() + 1.0));
}

double log_abs_shift(const HalfPlanePoint& w, double s) {
    const double l = w.log_rho();
    const double c = w.cos_theta();
    if (l > 30.0) {
        const double e = std::exp(-l);
        return l + 0.5 * std::log1p(2.0 * s * e * c + e * e);
    }
    if (l < -30.0) {
        const double e = std::exp(l);
        return 0.5 * std::log1p(2.0 * s * e * c + e * e);
    }
    const double rho = std::exp(l);
    double re;
    if (s < 0.0) {
        const double half = std::sin(0.5 * w.theta());
        re = std::expm1(l) * c - 2.0 * half * half;
    } else {
        re = rho * c + 1.0;
    }
    return std::log(std::hypot(re, rho * w.sin_theta()));
}

double log_one_minus_abs_cayley_inv(const HalfPlanePoint& w) {
    const double lp = log_abs_shift(w, 1.0);
    const double lm = log_abs_shift(w, -1.0);
    const double log_gap2 = std::log(4.0) + w.log_rho() + w.log_cos_theta() - 2.0 * lp;
    const double mod = std::exp(lm - lp);
    return log_gap2 - std::log1p(mod);
}

// ---------------------------------------------------------------------------

// Computed from the unrotated point so that 1 - |z|^2 keeps full relative
// accuracy.
HalfPlanePoint cayley_toward(DiscPoint z, Complex tau) {
    const Complex zc = z.value();
    const Complex d = tau - zc;
    const double d2 = std::norm(d);
    const double im = 2.0 * (zc * std::conj(tau)).imag();
    return HalfPlanePoint::from_complex({one_minus_abs2(zc) / d2, im / d2});
}

DiscPoint project_to_radius(DiscPoint z, const RadialGeodesic& geo) {
    const HalfPlanePoint w = cayley_toward(z, geo.direction());
    const double r = std::tanh(0.5 * w.log_rho());
    return DiscPoint(r * geo.direction());
}

double dist_to_radius(DiscPoint z, const RadialGeodesic& geo) {
    return dist_to_positive_axis(cayley_toward(z, geo.direction()));
}

HalfPlanePoint project_to_positive_axis(const HalfPlanePoint& w) {
    return HalfPlanePoint::polar(w.log_rho(), 0.0);
}

double dist_to_positive_axis(const HalfPlanePoint& w) {
    // k(1, e^{i theta}) = (1/2) log((1 + |sin theta|) / cos theta)
    return 0.5 * (std::log1p(std::abs(w.sin_theta())) - w.log_cos_theta());
}

// ---------------------------------------------------------------------------

double path_length(Space space, std::span<const Complex> polyline, int panels) {
    if (panels < 1) throw std::invalid_argument("path_length: panels must be >= 1");
    for (const Complex& v : polyline) {
        const bool inside = space == Space::Disc ? one_minus_abs2(v) > 0.0 : v.real() > 0.0;
        if (!inside) throw std::domain_error("path_length: vertex outside the open space");
    }
    double total = 0.0;
    for (std::size_t i = 1; i < polyline.size(); ++i) {
        const Complex a = polyline[i - 1], b = polyline[i];
        const Complex d = b - a;
        if (d == Complex{}) continue;
        total += composite_gauss_legendre(
            [&](double s) { return kappa(space, a + s * d, d); }, 0.0, 1.0, panels);
    }
    return total;
}

}  // namespace hypspeed
