#include "hypspeed/map_chain.hpp"

#include <cmath>
#include <stdexcept>

namespace hypspeed {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kArgSlack = 1e-12;

void check_branch(const PowerLink& p, Complex z) {
    const double arg = std::arg(z);
    if (z == Complex{} || arg < p.arg_lo - kArgSlack || arg > p.arg_hi + kArgSlack)
        throw std::domain_error("power link: argument outside the recorded branch range");
}

// Principal power via log-polar data: |z|^gamma e^{i gamma arg z}.
Complex principal_power(Complex z, double gamma) {
    if (z == Complex{}) return {};
    const double lr = gamma * std::log(std::abs(z));
    return std::exp(lr) * unit(gamma * std::arg(z));
}

}  // namespace

RiemannMapChain& RiemannMapChain::then(MapLink link) {
    if (const auto* a = std::get_if<AffineLink>(&link); a && a->a == Complex{})
        throw std::invalid_argument("affine link with zero slope is not invertible");
    if (const auto* p = std::get_if<PowerLink>(&link)) {
        if (!(p->gamma > 0.0)) throw std::invalid_argument("power link needs gamma > 0");
        if (p->arg_lo < -kPi - kArgSlack || p->arg_hi > kPi + kArgSlack || p->arg_lo >= p->arg_hi)
            throw std::invalid_argument("power link: input sector exceeds the principal branch");
        if (p->gamma * std::max(std::abs(p->arg_lo), std::abs(p->arg_hi)) > kPi + kArgSlack)
            throw std::invalid_argument("power link: image sector exceeds the principal branch");
    }
    if (const auto* e = std::get_if<ExpScaleLink>(&link); e && !(e->k > 0.0))
        throw std::invalid_argument("exp_scale link needs k > 0");
    links_.push_back(link);
    return *this;
}

Complex apply_link(const MapLink& link, Complex z) {
    return std::visit(
        overloaded{
            [&](const AffineLink& l) { return l.a * z + l.b; },
            [&](const PowerLink& l) {
                check_branch(l, z);
                return principal_power(z, l.gamma);
            },
            [&](const ExpScaleLink& l) {
                return Complex{0.0, -1.0} * std::exp(Complex{0.0, l.k} * z);
            },
            [&](const CayleyLink&) { return cayley_map(z); },
            [&](const CayleyInvLink&) { return cayley_inv_map(z); },
        },
        link);
}

Complex invert_link(const MapLink& link, Complex w) {
    return std::visit(
        overloaded{
            [&](const AffineLink& l) { return (w - l.b) / l.a; },
            [&](const PowerLink& l) { return principal_power(w, 1.0 / l.gamma); },
            [&](const ExpScaleLink& l) {
                // log(i w) / (i k), principal logarithm
                return std::log(Complex{0.0, 1.0} * w) / Complex{0.0, l.k};
            },
            [&](const CayleyLink&) { return cayley_inv_map(w); },
            [&](const CayleyInvLink&) { return cayley_map(w); },
        },
        link);
}

Complex link_derivative(const MapLink& link, Complex z) {
    return std::visit(
        overloaded{
            [&](const AffineLink& l) { return l.a; },
            [&](const PowerLink& l) {
                check_branch(l, z);
                return l.gamma * principal_power(z, l.gamma) / z;
            },
            [&](const ExpScaleLink& l) { return l.k * std::exp(Complex{0.0, l.k} * z); },
            [&](const CayleyLink&) { return 2.0 / ((1.0 - z) * (1.0 - z)); },
            [&](const CayleyInvLink&) { return 2.0 / ((z + 1.0) * (z + 1.0)); },
        },
        link);
}

Complex RiemannMapChain::forward(Complex z) const {
    for (const auto& l : links_) z = apply_link(l, z);
    return z;
}

HalfPlanePoint RiemannMapChain::forward_halfplane(Complex z) const {
    if (links_.empty()) return HalfPlanePoint::from_complex(z);
    for (std::size_t i = 0; i + 1 < links_.size(); ++i) z = apply_link(links_[i], z);
    return std::visit(
        overloaded{
            [&](const PowerLink& l) {
                check_branch(l, z);
                if (l.gamma == 1.0) return HalfPlanePoint::from_complex(z);
                return HalfPlanePoint::polar(l.gamma * std::log(std::abs(z)), l.gamma * std::arg(z));
            },
            [&](const ExpScaleLink& l) {
                // -i e^{ikz}: modulus e^{-k Im z}, argument k Re z - pi/2
                const double phase = l.k * z.real();
                if (!(phase > 0.0 && phase < kPi))
                    throw std::domain_error("exp_scale link: input outside its strip");
                return HalfPlanePoint::from_gap(-l.k * z.imag(), std::min(phase, kPi - phase),
                                                phase < kHalfPi);
            },
            [&](const CayleyLink&) { return cayley(DiscPoint(z)); },
            [&](const auto& l) { return HalfPlanePoint::from_complex(apply_link(l, z)); },
        },
        links_.back());
}

Complex RiemannMapChain::inverse(Complex w) const {
    for (auto it = links_.rbegin(); it != links_.rend(); ++it) w = invert_link(*it, w);
    return w;
}

Complex RiemannMapChain::inverse(const HalfPlanePoint& w) const {
    if (links_.empty()) return w.to_complex();
    Complex z = std::visit(
        overloaded{
            [&](const PowerLink& l) {
                const double lr = w.log_rho() / l.gamma;
                if (lr > 700.0) throw std::domain_error("inverse: value overflows");
                return std::exp(lr) * unit(w.theta() / l.gamma);
            },
            [&](const ExpScaleLink& l) {
                return Complex{(w.theta() + kHalfPi) / l.k, -w.log_rho() / l.k};
            },
            [&](const CayleyLink&) { return cayley_inv(w).value(); },
            [&](const auto& l) {
                if (w.log_rho() > 700.0) throw std::domain_error("inverse: value overflows");
                return invert_link(l, w.to_complex());
            },
        },
        links_.back());
    for (auto it = links_.rbegin() + 1; it != links_.rend(); ++it) z = invert_link(*it, z);
    return z;
}

Complex RiemannMapChain::derivative(Complex z) const {
    Complex d{1.0, 0.0};
    for (const auto& l : links_) {
        d *= link_derivative(l, z);
        z = apply_link(l, z);
    }
    return d;
}

}  // namespace hypspeed
