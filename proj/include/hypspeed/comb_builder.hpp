#pragma once

// Comb domains whose quasi-hyperbolic lower bound along the imaginary axis
// beats a prescribed sublinear function g infinitely often.

#include "hypspeed/domains.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hypspeed {

enum class GKind { Log1p, Sqrt, Pow, Table };

struct GSpec {
    GKind kind = GKind::Log1p;
    double exponent = 0.5;                          // for Pow
    std::vector<std::pair<double, double>> table;  // (t, g) with t > 0, for Table

    double operator()(double t) const;
    std::string name() const;

    static GSpec log1p() { return {}; }
    static GSpec sqrt() { return {GKind::Sqrt, 0.5, {}}; }
    static GSpec pow(double p) { return {GKind::Pow, p, {}}; }
    static GSpec custom(std::vector<std::pair<double, double>> table) {
        return {GKind::Table, 0.0, std::move(table)};
    }
};

enum class AKind { Linear, Geometric, Explicit };

struct ASpec {
    AKind kind = AKind::Linear;
    double ratio = 2.0;
    std::vector<double> values;

    /// first n terms a_1..a_n
    std::vector<double> terms(int n) const;

    static ASpec linear() { return {}; }
    static ASpec geometric(double ratio) { return {AKind::Geometric, ratio, {}}; }
    static ASpec explicit_list(std::vector<double> v) { return {AKind::Explicit, 0.0, std::move(v)}; }
};

struct CombConstruction {
    GSpec g;
    std::vector<double> a;  // a_1..a_{J+1}
    std::vector<double> b;  // b_1..b_{J+1}
    std::vector<double> x;  // x_1..x_J
    double extent = 0.0;
    DomainSpec domain;

    int J() const noexcept { return static_cast<int>(x.size()); }
    /// (j a_{j+1} g(b_{j+1}) + x_j) / b_{j+1}, which must stay below 1
    double constraint(int j) const;
};

/// Throws ValidationError if g fails the sublinearity probe or a is not
/// strictly increasing and positive.
CombConstruction build_comb(const GSpec& g, const ASpec& a, int J);

/// g(T)/T < 0.5 g(T/10)/(T/10) and g(T) > g(T/10) for T = 10^3 .. 10^12
bool sublinear_on_probe(const GSpec& g);

struct CombRatio {
    int j = 0;
    double lower = 0.0;       // quasihyp_lower(Omega, 1e-6, b_{j+1})
    double g_value = 0.0;     // g(b_{j+1})
    double ratio = 0.0;       // lower / g_value
    double restricted = 0.0;  // the same integral over [x_j, b_{j+1}] only
    double restricted_closed_form = 0.0;  // (b_{j+1} - x_j) / (4 a_{j+1})
};

inline constexpr double kCombStart = 1e-6;

std::vector<CombRatio> verify_comb(const CombConstruction& cc);

}  // namespace hypspeed
