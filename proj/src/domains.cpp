#include "hypspeed/domains.hpp"

#include "hypspeed/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hypspeed {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// n . v <= c
struct HalfSpace {
    double nx, ny, c;
};
using ConvexPiece = std::vector<HalfSpace>;

double feasibility_tol(Complex q) { return 1e-12 * (1.0 + std::abs(q)); }

bool feasible(const ConvexPiece& piece, double x, double y, double tol) {
    for (const auto& h : piece) {
        const double s = std::hypot(h.nx, h.ny);
        if (h.nx * x + h.ny * y - h.c > tol * s) return false;
    }
    return true;
}

// Euclidean distance from q to a closed convex polygonal region; infinite if
// the region is empty.
double distance_to_piece(const ConvexPiece& piece, Complex q) {
    const double qx = q.real(), qy = q.imag();
    bool inside = true;
    for (const auto& h : piece)
        if (h.nx * qx + h.ny * qy > h.c) inside = false;
    if (inside) return 0.0;

    const double tol = feasibility_tol(q);
    double best = kInf;
    for (const auto& h : piece) {
        const double nn = h.nx * h.nx + h.ny * h.ny;
        const double s = (h.nx * qx + h.ny * qy - h.c) / nn;
        const double px = qx - s * h.nx, py = qy - s * h.ny;
        if (feasible(piece, px, py, tol)) best = std::min(best, std::hypot(px - qx, py - qy));
    }
    for (std::size_t i = 0; i < piece.size(); ++i) {
        for (std::size_t j = i + 1; j < piece.size(); ++j) {
            const auto& a = piece[i];
            const auto& b = piece[j];
            const double det = a.nx * b.ny - a.ny * b.nx;
            if (std::abs(det) < 1e-14 * std::hypot(a.nx, a.ny) * std::hypot(b.nx, b.ny)) continue;
            const double x = (a.c * b.ny - a.ny * b.c) / det;
            const double y = (a.nx * b.c - a.c * b.nx) / det;
            if (feasible(piece, x, y, tol)) best = std::min(best, std::hypot(x - qx, y - qy));
        }
    }
    return best;
}

// {v : cross(d1, v - p) >= 0, cross(v - p, d2) >= 0, dot(mid, v - p) >= 0},
// the closed wedge of directions from d1 counterclockwise to d2 (span <= pi).
ConvexPiece wedge(Complex p, double from, double to) {
    const Complex d1 = unit(from), d2 = unit(to), m = unit(0.5 * (from + to));
    auto at_least_zero = [&](double ax, double ay) {
        // ax*(x - px) + ay*(y - py) >= 0
        return HalfSpace{-ax, -ay, -(ax * p.real() + ay * p.imag())};
    };
    return {at_least_zero(-d1.imag(), d1.real()), at_least_zero(d2.imag(), -d2.real()),
            at_least_zero(m.real(), m.imag())};
}

ConvexPiece downward_ray(double x, double top) {
    return {HalfSpace{1.0, 0.0, x}, HalfSpace{-1.0, 0.0, -x}, HalfSpace{0.0, 1.0, top}};
}

std::vector<ConvexPiece> complement_pieces(const DomainSpec& domain) {
    switch (domain.kind()) {
        case DomainKind::HalfPlaneRight:
            return {{HalfSpace{1.0, 0.0, domain.as<HalfPlaneRight>().p.real()}}};
        case DomainKind::Strip: {
            const double r = domain.as<Strip>().r;
            return {{HalfSpace{1.0, 0.0, 0.0}}, {HalfSpace{-1.0, 0.0, -r}}};
        }
        case DomainKind::Koebe: {
            const Complex p = domain.as<Koebe>().p;
            return {downward_ray(p.real(), p.imag())};
        }
        case DomainKind::Sector: {
            const auto& s = domain.as<Sector>();
            const double from = kHalfPi + s.beta;
            const double to = 2.5 * kPi - s.alpha;
            const double width = to - from;
            if (width <= kPi) return {wedge(s.p, from, to)};
            const double mid = 0.5 * (from + to);
            return {wedge(s.p, from, mid), wedge(s.p, mid, to)};
        }
        case DomainKind::Comb: {
            std::vector<ConvexPiece> pieces;
            for (const auto& t : domain.as<Comb>().teeth) {
                pieces.push_back(downward_ray(t.a, t.b));
                pieces.push_back(downward_ray(-t.a, t.b));
            }
            return pieces;
        }
    }
    return {};
}

void check_extent(const DomainSpec& domain, Complex p) {
    if (p.imag() > domain.extent())
        throw std::domain_error("delta: query above the materialized comb extent");
}

double min_over(const std::vector<ConvexPiece>& pieces, Complex p) {
    double best = kInf;
    for (const auto& piece : pieces) best = std::min(best, distance_to_piece(piece, p));
    return best;
}

// One slit x = xs, y <= top seen from the vertical line Re = re.
struct Slit {
    double h;
    double top;
};

double slit_distance(const Slit& s, double r) {
    return r <= s.top ? s.h : std::hypot(s.h, r - s.top);
}

double slit_integral(const Slit& s, double lo, double hi) {
    if (hi <= s.top) return (hi - lo) / s.h;
    if (lo >= s.top) return std::asinh((hi - s.top) / s.h) - std::asinh((lo - s.top) / s.h);
    return (s.top - lo) / s.h + std::asinh((hi - s.top) / s.h);
}

double comb_integral(const std::vector<Slit>& slits, double t0, double t1) {
    std::vector<double> cuts{t0, t1};
    auto add = [&](double r) {
        if (r > t0 && r < t1 && std::isfinite(r)) cuts.push_back(r);
    };
    for (std::size_t j = 0; j < slits.size(); ++j) {
        add(slits[j].top);
        for (std::size_t k = 0; k < slits.size(); ++k) {
            if (k == j) continue;
            const Slit& a = slits[j];
            const Slit& b = slits[k];
            // constant part of a against the hyperbolic part of b
            if (a.h >= b.h) {
                const double s = std::sqrt(a.h * a.h - b.h * b.h);
                add(b.top + s);
                add(b.top - s);
            }
            // hyperbolic parts of both
            if (k > j && a.top != b.top)
                add((b.h * b.h - a.h * a.h + b.top * b.top - a.top * a.top) /
                    (2.0 * (b.top - a.top)));
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    double total = 0.0;
    for (std::size_t i = 1; i < cuts.size(); ++i) {
        const double lo = cuts[i - 1], hi = cuts[i];
        const double mid = 0.5 * (lo + hi);
        std::size_t arg = 0;
        double best = kInf;
        for (std::size_t k = 0; k < slits.size(); ++k) {
            const double d = slit_distance(slits[k], mid);
            if (d < best) {
                best = d;
                arg = k;
            }
        }
        total += slit_integral(slits[arg], lo, hi);
    }
    return total;
}

double graded_integral(const DomainSpec& domain, double t0, double t1, double re) {
    auto inv_delta = [&](double r) { return 1.0 / delta(domain, {re, r}); };
    double total = 0.0;
    double s = t0;
    const double floor = 1e-12 * std::max(1.0, std::abs(t1 - t0));
    while (s < t1) {
        const double step = std::max({delta(domain, {re, s}), std::abs(s), floor});
        const double next = std::min(t1, s + step);
        total += adaptive_gauss_legendre(inv_delta, s, next, 1e-12).value;
        s = next;
    }
    return total;
}

}  // namespace

std::string DomainSpec::name() const {
    switch (kind()) {
        case DomainKind::HalfPlaneRight: return "halfplane";
        case DomainKind::Strip: return "strip";
        case DomainKind::Sector: return "sector";
        case DomainKind::Koebe: return "koebe";
        case DomainKind::Comb: return "comb";
    }
    return "unknown";
}

bool DomainSpec::contains(Complex w) const {
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return false;
    switch (kind()) {
        case DomainKind::HalfPlaneRight: return w.real() > as<HalfPlaneRight>().p.real();
        case DomainKind::Strip: return w.real() > 0.0 && w.real() < as<Strip>().r;
        case DomainKind::Sector: {
            const auto& s = as<Sector>();
            const Complex u = (w - s.p) * Complex{0.0, -1.0};
            if (u == Complex{}) return false;
            const double phi = std::arg(u);
            return phi > -s.alpha && phi < s.beta;
        }
        case DomainKind::Koebe: {
            const Complex p = as<Koebe>().p;
            return !(w.real() == p.real() && w.imag() <= p.imag());
        }
        case DomainKind::Comb:
            for (const auto& t : as<Comb>().teeth)
                if (std::abs(w.real()) == t.a && w.imag() <= t.b) return false;
            return true;
    }
    return false;
}

Complex DomainSpec::base_point() const {
    switch (kind()) {
        case DomainKind::HalfPlaneRight: return as<HalfPlaneRight>().p + 1.0;
        case DomainKind::Strip: return {0.5 * as<Strip>().r, 0.0};
        case DomainKind::Sector: {
            const auto& s = as<Sector>();
            return s.p + Complex{0.0, 1.0} * unit(0.5 * (s.beta - s.alpha));
        }
        case DomainKind::Koebe: return as<Koebe>().p + Complex{0.0, 1.0};
        case DomainKind::Comb: return {};
    }
    return {};
}

DomainSpec build_domain(const DomainShape& shape) {
    auto finite = [](Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
    DomainSpec d;
    d.shape_ = shape;
    d.extent_ = kInf;
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, HalfPlaneRight> || std::is_same_v<T, Koebe>) {
                if (!finite(s.p)) throw ValidationError("p must be finite");
            } else if constexpr (std::is_same_v<T, Strip>) {
                if (!(s.r > 0.0) || !std::isfinite(s.r)) throw ValidationError("strip width r>0 violated");
            } else if constexpr (std::is_same_v<T, Sector>) {
                if (!finite(s.p)) throw ValidationError("p must be finite");
                if (!(s.alpha >= 0.0 && s.alpha <= kPi && s.beta >= 0.0 && s.beta <= kPi))
                    throw ValidationError("sector angles must lie in [0, pi]");
                if (!(s.alpha + s.beta > 0.0)) throw ValidationError("α+β>0 violated");
            } else {
                if (s.teeth.empty()) throw ValidationError("comb needs at least one tooth");
                for (std::size_t j = 0; j < s.teeth.size(); ++j) {
                    const Tooth& t = s.teeth[j];
                    if (!(t.a > 0.0) || !std::isfinite(t.a) || !std::isfinite(t.b))
                        throw ValidationError("comb tooth needs finite a > 0 and finite b");
                    if (j > 0 && !(t.a > s.teeth[j - 1].a))
                        throw ValidationError("comb tooth abscissae a_j must be strictly increasing");
                    if (j > 0 && !(t.b > s.teeth[j - 1].b))
                        throw ValidationError("comb tooth heights b_j must be strictly increasing");
                }
                d.extent_ = s.extent.value_or(s.teeth.back().b);
                if (!(d.extent_ >= s.teeth.back().b))
                    throw ValidationError("comb extent below the last tooth height");
            }
        },
        shape);
    return d;
}

RiemannMapChain to_halfplane(const DomainSpec& domain) {
    RiemannMapChain chain;
    switch (domain.kind()) {
        case DomainKind::HalfPlaneRight:
            chain.then(AffineLink{{1.0, 0.0}, -domain.as<HalfPlaneRight>().p});
            break;
        case DomainKind::Strip:
            chain.then(ExpScaleLink{kPi / domain.as<Strip>().r});
            break;
        case DomainKind::Sector: {
            const auto& s = domain.as<Sector>();
            const Complex a = Complex{0.0, -1.0} * unit(-0.5 * (s.beta - s.alpha));
            const double half = 0.5 * (s.alpha + s.beta);
            chain.then(AffineLink{a, -a * s.p});
            chain.then(PowerLink{kPi / (s.alpha + s.beta), -half, half});
            break;
        }
        case DomainKind::Koebe: {
            const Complex p = domain.as<Koebe>().p;
            chain.then(AffineLink{{0.0, -1.0}, Complex{0.0, 1.0} * p});
            chain.then(PowerLink{0.5, -kPi, kPi});
            break;
        }
        case DomainKind::Comb:
            throw UnsupportedError("no closed-form map; use quasihyp_lower");
    }
    return chain;
}

double delta(const DomainSpec& domain, Complex p) {
    if (domain.kind() == DomainKind::Comb) check_extent(domain, p);
    if (!domain.contains(p)) throw std::domain_error("delta: point outside the domain");
    const double d = min_over(complement_pieces(domain), p);
    if (!(d > 0.0)) throw std::domain_error("delta: point outside the domain");
    return d;
}

double delta_pm(const DomainSpec& domain, const OmegaSign& sign, Complex q) {
    if (domain.kind() == DomainKind::Comb) check_extent(domain, q);
    const double x = sign.ref.real();
    const HalfSpace cut = sign.side == Side::Plus ? HalfSpace{1.0, 0.0, x} : HalfSpace{-1.0, 0.0, -x};
    const bool in_extra = sign.side == Side::Plus ? q.real() > x : q.real() < x;
    if (!domain.contains(q) && !in_extra)
        throw std::domain_error("delta_pm: point outside the enlarged domain");
    auto pieces = complement_pieces(domain);
    for (auto& piece : pieces) piece.push_back(cut);
    const double d = min_over(pieces, q);
    if (!(d > 0.0)) throw std::domain_error("delta_pm: point outside the enlarged domain");
    return d;
}

double k_domain(const DomainSpec& domain, Complex w1, Complex w2) {
    if (domain.kind() == DomainKind::Comb)
        throw UnsupportedError("no closed-form map; use quasihyp_lower");
    if (!domain.contains(w1) || !domain.contains(w2))
        throw std::domain_error("k_domain: point outside the domain");
    const RiemannMapChain chain = to_halfplane(domain);
    return k_half(chain.forward_halfplane(w1), chain.forward_halfplane(w2));
}

double quasihyp_lower(const DomainSpec& domain, double t0, double t1, double re) {
    if (!(t1 >= t0)) throw std::invalid_argument("quasihyp_lower: needs t0 <= t1");
    if (!domain.contains({re, t0})) throw std::domain_error("quasihyp_lower: segment exits the domain");
    if (domain.kind() == DomainKind::Comb) check_extent(domain, {re, t1});
    if (t0 == t1) return 0.0;

    if (domain.kind() == DomainKind::Comb) {
        std::vector<Slit> slits;
        bool exact = true;
        for (const auto& t : domain.as<Comb>().teeth) {
            for (double xs : {t.a, -t.a}) {
                const double h = std::abs(xs - re);
                if (h == 0.0) exact = false;
                slits.push_back({h, t.b});
            }
        }
        if (exact) return 0.25 * comb_integral(slits, t0, t1);
    }
    return 0.25 * graded_integral(domain, t0, t1, re);
}

}  // namespace hypspeed
