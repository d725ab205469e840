#include "hypspeed/semigroups.hpp"

#include <cmath>

namespace hypspeed {

namespace {

constexpr double kCartesianLimit = 600.0;

void require_model(const KoenigsSemigroup& sg) {
    if (!sg.has_model()) throw UnsupportedError("no closed-form map; use quasihyp_lower");
}

bool is_identity(const DiscAutomorphism& m) {
    return m.a().value() == Complex{} && std::abs(std::remainder(m.phase() - kPi, 2.0 * kPi)) < 1e-15;
}

// Largest gap between the opening directions of a sector and the downward
// direction; the union of downward translates is the plane iff it is < pi.
double downward_gap(const Sector& s) { return std::max(kPi - s.alpha, kPi - s.beta); }

}  // namespace

std::string to_string(SemigroupType type) {
    switch (type) {
        case SemigroupType::Hyperbolic: return "hyperbolic";
        case SemigroupType::ParabolicPositiveStep: return "parabolic_positive_step";
        case SemigroupType::ParabolicZeroStep: return "parabolic_zero_step";
    }
    return "unknown";
}

Classification classify(const DomainSpec& domain) {
    switch (domain.kind()) {
        case DomainKind::Strip: return {SemigroupType::Hyperbolic, kPi / domain.as<Strip>().r};
        case DomainKind::HalfPlaneRight: return {SemigroupType::ParabolicPositiveStep, 0.0};
        case DomainKind::Sector:
            if (downward_gap(domain.as<Sector>()) >= kPi) return {SemigroupType::ParabolicPositiveStep, 0.0};
            return {SemigroupType::ParabolicZeroStep, 0.0};
        case DomainKind::Koebe:
        case DomainKind::Comb: return {SemigroupType::ParabolicZeroStep, 0.0};
    }
    return {};
}

DiscPoint OrbitPoint::disc() const {
    if (!representable) throw std::domain_error("orbit point rounds onto the unit circle");
    return DiscPoint(value);
}

KoenigsSemigroup::KoenigsSemigroup(DomainSpec image_domain, DiscAutomorphism m)
    : domain_(std::move(image_domain)), m_(m), class_(classify(domain_)) {
    if (domain_.kind() == DomainKind::Comb) {
        base_ = domain_.base_point();
        return;
    }
    chain_ = to_halfplane(domain_);
    const HalfPlanePoint g0 = cayley(m_(DiscPoint{}));
    base_ = is_identity(m_) ? domain_.base_point() : chain_.inverse(g0);

    const double near = chain_.forward_halfplane(base_ + Complex{0.0, 1e6}).log_rho();
    const double far = chain_.forward_halfplane(base_ + Complex{0.0, 1e12}).log_rho();
    dw_infinite_ = far > near;
    tau_ = m_.apply_inverse(dw_infinite_ ? Complex{1.0, 0.0} : Complex{-1.0, 0.0});
    tau_ /= std::abs(tau_);

    // Frame map N: the automorphism of the half-plane with N(G(0)) = 1 sending
    // the Denjoy-Wolff point to infinity; N(w) = a*w + ib, or a/w + ib.
    const Complex w0 = dw_infinite_ ? g0.to_complex() : g0.reciprocal().to_complex();
    frame_a_ = 1.0 / w0.real();
    frame_b_ = -frame_a_ * w0.imag();
}

Complex KoenigsSemigroup::koenigs(DiscPoint z) const {
    require_model(*this);
    if (z.value() == Complex{} && is_identity(m_)) return base_;
    return chain_.inverse(cayley(m_(z)));
}

DiscPoint KoenigsSemigroup::koenigs_inverse(Complex w) const {
    require_model(*this);
    if (!domain_.contains(w)) throw std::domain_error("koenigs_inverse: point outside the image domain");
    return m_.inverse(cayley_inv(chain_.forward_halfplane(w)));
}

HalfPlanePoint KoenigsSemigroup::to_frame(const HalfPlanePoint& fw) const {
    const HalfPlanePoint u = dw_infinite_ ? fw : fw.reciprocal();
    if (u.log_rho() < -kCartesianLimit)
        throw std::domain_error("frame point not representable");
    if (u.log_rho() < kCartesianLimit) {
        const double rho = std::exp(u.log_rho());
        return HalfPlanePoint::from_complex(
            {frame_a_ * rho * u.cos_theta(), frame_a_ * rho * u.sin_theta() + frame_b_});
    }
    // a*u*(1 + eps) with eps = i b / (a u)
    const Complex eps = Complex{0.0, frame_b_ / frame_a_} * std::exp(-u.log_rho()) * unit(-u.theta());
    const double log_mod = std::log(frame_a_) + u.log_rho() + std::log(std::abs(1.0 + eps));
    const double turn = std::arg(1.0 + eps);
    const double theta = u.theta() + turn;
    const double gap = u.edge_gap() - (u.theta() < 0.0 ? -turn : turn);
    return HalfPlanePoint::from_gap(log_mod, gap, theta < 0.0);
}

HalfPlanePoint KoenigsSemigroup::frame_point(DiscPoint z, double t) const {
    require_model(*this);
    if (!(t >= 0.0) || !std::isfinite(t)) throw std::invalid_argument("orbit time must be finite and >= 0");
    const Complex w = koenigs(z) + Complex{0.0, t};
    return to_frame(chain_.forward_halfplane(w));
}

KoenigsSemigroup make_semigroup(const DomainSpec& domain) { return KoenigsSemigroup(domain); }

OrbitPoint orbit(const KoenigsSemigroup& sg, DiscPoint z, double t) {
    OrbitPoint out;
    out.frame = sg.frame_point(z, t);
    out.log_gap = log_one_minus_abs_cayley_inv(out.frame);
    const Complex tau = sg.denjoy_wolff();
    try {
        out.value = tau * cayley_inv(out.frame).value();
        out.representable = one_minus_abs2(out.value) > 0.0;
    } catch (const std::domain_error&) {
        out.representable = false;
    }
    if (!out.representable) out.value = tau;
    return out;
}

Complex denjoy_wolff(const KoenigsSemigroup& sg) {
    require_model(sg);
    return sg.denjoy_wolff();
}

KoenigsSemigroup conjugate(const KoenigsSemigroup& sg, const DiscAutomorphism& m) {
    return KoenigsSemigroup(sg.image_domain(), sg.automorphism().compose(m));
}

double step_distance(const KoenigsSemigroup& sg, DiscPoint z, double t) {
    return k_half(sg.frame_point(z, t), sg.frame_point(z, t + 1.0));
}

}  // namespace hypspeed
