#pragma once

// Invertible compositions of elementary conformal maps with closed-form
// derivatives. The last link may produce its output in log-polar form, which
// is how orbit points far out in the half-plane are evaluated.

#include "hypspeed/hyp_core.hpp"

#include <variant>
#include <vector>

namespace hypspeed {

/// w -> a*w + b
struct AffineLink {
    Complex a{1.0, 0.0};
    Complex b{0.0, 0.0};
};

/// w -> w^gamma on the principal branch. The input is promised to have its
/// argument inside [arg_lo, arg_hi], which must lie within [-pi, pi].
struct PowerLink {
    double gamma = 1.0;
    double arg_lo = -kHalfPi;
    double arg_hi = kHalfPi;
};

/// z -> -i * exp(i*k*z), mapping {0 < Re z < pi/k} onto the right half-plane.
struct ExpScaleLink {
    double k = 1.0;
};

struct CayleyLink {};
struct CayleyInvLink {};

using MapLink = std::variant<AffineLink, PowerLink, ExpScaleLink, CayleyLink, CayleyInvLink>;

class RiemannMapChain {
public:
    RiemannMapChain() = default;

    /// Appends a link; throws std::invalid_argument for a degenerate affine map
    /// or a power link whose admissible argument range leaves (-pi, pi).
    RiemannMapChain& then(MapLink link);

    const std::vector<MapLink>& links() const noexcept { return links_; }
    bool empty() const noexcept { return links_.empty(); }

    Complex forward(Complex z) const;
    /// Forward map with the final link evaluated straight into log-polar form.
    HalfPlanePoint forward_halfplane(Complex z) const;
    Complex inverse(Complex w) const;
    Complex inverse(const HalfPlanePoint& w) const;
    Complex derivative(Complex z) const;

private:
    std::vector<MapLink> links_;
};

Complex apply_link(const MapLink& link, Complex z);
Complex invert_link(const MapLink& link, Complex w);
Complex link_derivative(const MapLink& link, Complex z);

}  // namespace hypspeed
