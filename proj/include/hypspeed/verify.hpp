#pragma once

// Seeded property suites re-deriving the inequalities and asymptotic
// constants from the public operations.

#include "hypspeed/comb_builder.hpp"
#include "hypspeed/speeds.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace hypspeed {

struct SuiteReport {
    std::string suite;
    long long samples = 0;
    long long violations = 0;
    double worst_margin = 0.0;
    std::uint64_t seed = 0;
    double tol = 0.0;
    std::map<std::string, double> details;

    bool passed() const noexcept { return violations == 0; }
};

nlohmann::ordered_json to_json(const SuiteReport& report);

/// Deterministic uniform doubles in [0, 1) from a 64-bit Mersenne twister.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::mt19937_64 engine_;
};

/// Point at hyperbolic distance d from 1 in the direction phi (the image of
/// tanh(d) e^{i phi} under the Cayley map), computed without cancellation.
HalfPlanePoint halfplane_at_distance(double d, double phi);
/// Same point in the half-plane frame, drawn with d ~ U(0, d_max).
HalfPlanePoint sample_halfplane(Rng& rng, double d_max = 12.0);
/// tanh(d) e^{i phi} with d ~ U(0, d_max)
DiscPoint sample_disc(Rng& rng, double d_max);

struct BuiltExample {
    std::string label;
    DomainSpec domain;
};

/// Strip{pi/2}, HalfPlaneRight{0}, Sector{0,pi/4,pi/4}, Sector{0,pi,0}, Koebe{0}
std::vector<BuiltExample> built_examples();

std::vector<std::string> suite_names();
/// Public operations exercised by a suite.
std::vector<std::string> suite_coverage(const std::string& suite);
std::vector<std::string> public_operations();

/// samples = 0 selects the suite's default size. Throws std::invalid_argument
/// for an unknown suite name.
SuiteReport run_suite(const std::string& name, long long samples, std::uint64_t seed, double tol);

std::vector<std::string> experiment_names();
/// Data for one of the open-question presets; nothing is asserted.
nlohmann::ordered_json run_experiment(const std::string& name);

}  // namespace hypspeed
