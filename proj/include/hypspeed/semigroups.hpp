#pragma once

// Non-elliptic semigroups given by their Koenigs model: h(phi_t(z)) = h(z) + it
// with h = F^{-1} o C o M, where F maps the image domain onto the right
// half-plane, C is the Cayley transform and M a disc automorphism.

#include "hypspeed/domains.hpp"

namespace hypspeed {

enum class SemigroupType { Hyperbolic, ParabolicPositiveStep, ParabolicZeroStep };

struct Classification {
    SemigroupType type = SemigroupType::ParabolicZeroStep;
    double lambda = 0.0;  // spectral value, positive only for hyperbolic semigroups
};

Classification classify(const DomainSpec& domain);
std::string to_string(SemigroupType type);

/// Orbit point phi_t(z). Close to the boundary the disc value may round onto
/// the unit circle; the exact position is kept in `frame` (the point seen in
/// the half-plane picture where 0 maps to 1 and the Denjoy-Wolff point to
/// infinity) and in `log_gap` = log(1 - |phi_t(z)|).
struct OrbitPoint {
    Complex value{};
    double log_gap = 0.0;
    HalfPlanePoint frame{};
    bool representable = true;

    /// throws std::domain_error unless the point is representable in doubles
    DiscPoint disc() const;
};

class KoenigsSemigroup {
public:
    explicit KoenigsSemigroup(DomainSpec image_domain,
                              DiscAutomorphism m = DiscAutomorphism::identity());

    const DomainSpec& image_domain() const noexcept { return domain_; }
    /// Empty for a comb.
    const RiemannMapChain& chain() const noexcept { return chain_; }
    const DiscAutomorphism& automorphism() const noexcept { return m_; }
    const Classification& classification() const noexcept { return class_; }
    /// h(0)
    Complex base_model_point() const noexcept { return base_; }
    /// Denjoy-Wolff point in the disc.
    Complex denjoy_wolff() const noexcept { return tau_; }
    /// Whether the orbits tend to infinity (true) or to 0 in the F-picture.
    bool escapes_to_infinity() const noexcept { return dw_infinite_; }
    bool has_model() const noexcept { return !chain_.empty(); }

    /// h(z); throws UnsupportedError for a comb
    Complex koenigs(DiscPoint z) const;
    /// h^{-1}(w) for w in the image domain
    DiscPoint koenigs_inverse(Complex w) const;

    /// Image of phi_t(z) in the half-plane frame used for speeds.
    HalfPlanePoint frame_point(DiscPoint z, double t) const;
    /// Frame point of a given half-plane value F(w).
    HalfPlanePoint to_frame(const HalfPlanePoint& fw) const;

private:
    DomainSpec domain_;
    RiemannMapChain chain_;
    DiscAutomorphism m_;
    Classification class_;
    Complex base_{};
    Complex tau_{1.0, 0.0};
    bool dw_infinite_ = true;
    double frame_a_ = 1.0;
    double frame_b_ = 0.0;
};

KoenigsSemigroup make_semigroup(const DomainSpec& domain);

/// phi_t(z); throws UnsupportedError for a comb and std::invalid_argument for t < 0
OrbitPoint orbit(const KoenigsSemigroup& sg, DiscPoint z, double t);

/// Unimodular Denjoy-Wolff point.
Complex denjoy_wolff(const KoenigsSemigroup& sg);

/// Semigroup M^{-1} o phi_t o M.
KoenigsSemigroup conjugate(const KoenigsSemigroup& sg, const DiscAutomorphism& m);

/// omega(phi_t(z), phi_{t+1}(z))
double step_distance(const KoenigsSemigroup& sg, DiscPoint z, double t);

}  // namespace hypspeed
