#pragma once

// Canonical domains that are starlike at infinity (Omega + it lies in Omega for
// t >= 0), their closed-form maps onto the right half-plane, and Euclidean
// boundary distances.

#include "hypspeed/errors.hpp"
#include "hypspeed/hyp_core.hpp"
#include "hypspeed/map_chain.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hypspeed {

/// {Re w > Re p}
struct HalfPlaneRight {
    Complex p{};
};

/// {0 < Re z < r}
struct Strip {
    double r = 1.0;
};

/// p + i V(alpha, beta) with V(alpha, beta) = {r e^{i t} : r > 0, -alpha < t < beta}
struct Sector {
    Complex p{};
    double alpha = kHalfPi;
    double beta = kHalfPi;
};

/// Plane minus the slit {Re z = Re p, Im z <= Im p}
struct Koebe {
    Complex p{};
};

struct Tooth {
    double a = 1.0;
    double b = 0.0;
};

/// Plane minus the slits {Re z = +-a_j, Im z <= b_j}. Distances are only
/// meaningful up to height `extent`; by default the last tooth height.
struct Comb {
    std::vector<Tooth> teeth;
    std::optional<double> extent;
};

using DomainShape = std::variant<HalfPlaneRight, Strip, Sector, Koebe, Comb>;

enum class DomainKind { HalfPlaneRight, Strip, Sector, Koebe, Comb };

/// Validated, immutable domain.
class DomainSpec {
public:
    DomainKind kind() const noexcept { return static_cast<DomainKind>(shape_.index()); }
    const DomainShape& shape() const noexcept { return shape_; }
    std::string name() const;

    bool contains(Complex w) const;
    /// Canonical point mapped to 1 by the half-plane chain (0 for a comb).
    Complex base_point() const;
    /// Largest admissible imaginary part for distance queries (infinite except combs).
    double extent() const noexcept { return extent_; }

    template <class T>
    const T& as() const {
        return std::get<T>(shape_);
    }

private:
    friend DomainSpec build_domain(const DomainShape& shape);
    DomainShape shape_;
    double extent_ = 0.0;
};

/// Throws ValidationError on invalid parameters.
DomainSpec build_domain(const DomainShape& shape);

/// Chain onto the right half-plane sending base_point() to 1.
/// Throws UnsupportedError for a comb.
RiemannMapChain to_halfplane(const DomainSpec& domain);

enum class Side { Plus, Minus };

/// Omega+ = Omega u {Re w > Re ref},  Omega- = Omega u {Re w < Re ref}
struct OmegaSign {
    Side side = Side::Plus;
    Complex ref{};
};

double delta(const DomainSpec& domain, Complex p);
/// Distance to the complement of Omega+ or Omega-; +infinity if that is the plane.
double delta_pm(const DomainSpec& domain, const OmegaSign& sign, Complex q);

double k_domain(const DomainSpec& domain, Complex w1, Complex w2);

/// (1/4) * integral over r in [t0, t1] of dr / delta(re + i r).
double quasihyp_lower(const DomainSpec& domain, double t0, double t1, double re = 0.0);

}  // namespace hypspeed
