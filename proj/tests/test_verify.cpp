#include "hypspeed/verify.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

using namespace hypspeed;
using doctest::Approx;

TEST_CASE("random numbers are reproducible and in range") {
    Rng a(42), b(42), c(43);
    bool differs = false;
    for (int i = 0; i < 1000; ++i) {
        const double x = a.uniform();
        CHECK(x == b.uniform());
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
        differs = differs || x != c.uniform();
    }
    CHECK(differs);
    Rng r(1);
    const double y = r.uniform(-3.0, 5.0);
    CHECK(y >= -3.0);
    CHECK(y < 5.0);
}

TEST_CASE("points at a prescribed distance") {
    for (double d : {0.0, 0.5, 3.0, 12.0, 40.0}) {
        for (double phi : {0.0, 0.4, -2.0, kPi}) {
            const HalfPlanePoint w = halfplane_at_distance(d, phi);
            CHECK(k_half(HalfPlanePoint{}, w) == Approx(d).epsilon(1e-12));
        }
    }
    Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        const DiscPoint z = sample_disc(rng, 6.0);
        CHECK(omega(DiscPoint{}, z) <= 6.0 + 1e-9);
        CHECK(k_half(HalfPlanePoint{}, sample_halfplane(rng, 12.0)) <= 12.0 + 1e-9);
    }
}

TEST_CASE("built examples") {
    const auto ex = built_examples();
    REQUIRE(ex.size() == 5);
    std::vector<std::string> labels;
    for (const auto& e : ex) labels.push_back(e.label);
    CHECK(labels == std::vector<std::string>{"strip(pi/2)", "halfplane(0)", "sector(0,pi/4,pi/4)",
                                             "sector(0,pi,0)", "koebe(0)"});
    CHECK(ex[0].domain.kind() == DomainKind::Strip);
    CHECK(ex[4].domain.kind() == DomainKind::Koebe);
}

TEST_CASE("suite coverage reaches every public operation") {
    std::set<std::string> covered;
    for (const auto& name : suite_names())
        for (const auto& op : suite_coverage(name)) covered.insert(op);
    const auto ops = public_operations();
    for (const auto& op : ops) {
        INFO(op);
        CHECK(covered.count(op) == 1);
    }
    for (const char* op : {"omega", "k_half", "kappa", "cayley", "project_to_radius", "dist_to_radius",
                           "path_length", "build_domain", "to_halfplane", "delta", "delta_pm",
                           "k_domain", "quasihyp_lower", "classify", "orbit", "denjoy_wolff",
                           "sample_speeds", "surrogate_speeds", "fit_asymptotic",
                           "nontangential_ratio", "build_comb", "verify_comb"})
        CHECK(std::find(ops.begin(), ops.end(), op) != ops.end());
    CHECK_THROWS_AS(suite_coverage("nope"), std::invalid_argument);
}

TEST_CASE("every suite passes on a reduced sample count") {
    for (const auto& name : suite_names()) {
        INFO(name);
        const long long n = name == "lemma_halfplane" || name == "pythagoras" || name == "contraction" ? 500
                            : name == "basepoint" || name == "conjugation"                          ? 2
                                                                                                    : 0;
        const SuiteReport r = run_suite(name, n, 7, 1e-9);
        CHECK(r.suite == name);
        CHECK(r.samples > 0);
        CHECK(r.violations == 0);
        CHECK(r.passed());
        CHECK(r.seed == 7);
    }
}

TEST_CASE("suites are reproducible from their arguments") {
    const SuiteReport a = run_suite("pythagoras", 300, 42, 1e-9);
    const SuiteReport b = run_suite("pythagoras", 300, 42, 1e-9);
    CHECK(to_json(a).dump() == to_json(b).dump());
    const SuiteReport c = run_suite("pythagoras", 300, 43, 1e-9);
    CHECK(to_json(a).dump() != to_json(c).dump());
}

TEST_CASE("invalid arguments") {
    CHECK_THROWS_AS(run_suite("lemma_halfplane", 50, 1, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(run_suite("lemma_halfplane", -3, 1, 1e-9), std::invalid_argument);
}

TEST_CASE("report serialization") {
    const SuiteReport r = run_suite("split", 16, 42, 1e-9);
    const auto j = to_json(r);
    CHECK(j["suite"] == "split");
    CHECK(j["samples"].get<long long>() == r.samples);
    CHECK(j["violations"] == 0);
    CHECK(j["seed"] == 42);
    CHECK(j["tol"].get<double>() == 1e-9);
    CHECK(j.contains("worst_margin"));
    CHECK(j["passed"] == true);
    CHECK(j.begin().key() == "suite");
}

TEST_CASE("unknown names") {
    CHECK_THROWS_AS(run_suite("nope", 1, 1, 1e-9), std::invalid_argument);
    CHECK_THROWS_AS(run_experiment("q9"), std::invalid_argument);
}

TEST_CASE("experiments emit data") {
    const auto names = experiment_names();
    CHECK(names == std::vector<std::string>{"q1", "q2", "q3", "q4", "q5"});
    for (const auto& n : names) {
        const auto j = run_experiment(n);
        CHECK(j["experiment"] == n);
        CHECK(j["rows"].size() > 0);
    }
}
