#include "hypspeed/comb_builder.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace hypspeed;
using doctest::Approx;

namespace {

std::vector<oracle::Slit> slits_of(const CombConstruction& cc) {
    std::vector<oracle::Slit> out;
    for (std::size_t j = 0; j < cc.a.size(); ++j) out.push_back({cc.a[j], cc.b[j]});
    return out;
}

}  // namespace

TEST_CASE("first crossing point of the distance equation") {
    const CombConstruction cc = build_comb(GSpec::log1p(), ASpec::linear(), 1);
    CHECK(cc.b[0] == 1.0);
    CHECK(cc.x[0] == Approx(1.0 + std::sqrt(3.0)).epsilon(1e-15));
    CHECK(cc.x[0] == Approx(2.7320508).epsilon(1e-8));
    CHECK(cc.J() == 1);
}

TEST_CASE("construction invariants for several g and a") {
    const GSpec gs[] = {GSpec::log1p(), GSpec::sqrt(), GSpec::pow(0.3)};
    const ASpec as[] = {ASpec::linear(), ASpec::geometric(1.5), ASpec::explicit_list({1.0, 3.0, 4.0, 7.0, 8.0, 9.5})};
    for (const auto& g : gs) {
        for (const auto& a : as) {
            const CombConstruction cc = build_comb(g, a, 5);
            REQUIRE(cc.J() == 5);
            CHECK(cc.extent == cc.b.back());
            for (int j = 1; j <= 5; ++j) {
                CHECK(cc.a[j] > cc.a[j - 1]);
                CHECK(cc.b[j] > cc.b[j - 1]);
                CHECK(cc.x[j - 1] == Approx(cc.b[j - 1] + std::sqrt(cc.a[j] * cc.a[j] - cc.a[j - 1] * cc.a[j - 1])));
                CHECK(cc.constraint(j) < 1.0);
                // the search stops right below the margin
                CHECK(cc.constraint(j) > 0.998);
                if (j > 1) CHECK(cc.x[j - 1] > cc.x[j - 2]);
            }
        }
    }
}

TEST_CASE("linear g and bad parameters are rejected") {
    const std::vector<std::pair<double, double>> linear = {{1.0, 1.0}, {1e6, 1e6}, {1e13, 1e13}};
    CHECK_FALSE(sublinear_on_probe(GSpec::custom(linear)));
    CHECK_THROWS_AS(build_comb(GSpec::custom(linear), ASpec::linear(), 3), ValidationError);
    CHECK_THROWS_AS(build_comb(GSpec::pow(1.0), ASpec::linear(), 3), ValidationError);
    CHECK_THROWS_AS(build_comb(GSpec::log1p(), ASpec::linear(), 0), ValidationError);
    CHECK_THROWS_AS(build_comb(GSpec::log1p(), ASpec::geometric(1.0), 3), ValidationError);
    CHECK_THROWS_AS(build_comb(GSpec::log1p(), ASpec::explicit_list({1.0, 2.0}), 3), ValidationError);
    CHECK_THROWS_AS(build_comb(GSpec::log1p(), ASpec::explicit_list({1.0, 0.5, 2.0, 3.0}), 3),
                    ValidationError);
    CHECK(sublinear_on_probe(GSpec::log1p()));
    CHECK(sublinear_on_probe(GSpec::sqrt()));
}

TEST_CASE("tabulated g interpolates in log-log coordinates") {
    const GSpec g = GSpec::custom({{1.0, 1.0}, {100.0, 10.0}, {1e12, 1e6}});
    CHECK(g(1.0) == Approx(1.0));
    CHECK(g(10.0) == Approx(std::sqrt(10.0)));
    CHECK(g(1e4) == Approx(100.0));
    CHECK(g.name() == "table");
    CHECK(GSpec::pow(0.25).name() == "pow(0.25)");
    CHECK(GSpec::log1p().name() == "log1p");
    CHECK(build_comb(g, ASpec::linear(), 3).J() == 3);
}

TEST_CASE("ratio table for g = log(1 + t), a_j = j, J = 10") {
    const CombConstruction cc = build_comb(GSpec::log1p(), ASpec::linear(), 10);
    const auto ratios = verify_comb(cc);
    REQUIRE(ratios.size() == 10);
    for (const auto& r : ratios) {
        CHECK(r.ratio >= r.j / 4.0 - 1e-9);
        CHECK(r.g_value == Approx(std::log1p(cc.b[r.j])));
        CHECK(r.restricted == Approx(r.restricted_closed_form).epsilon(1e-12));
        CHECK(r.restricted_closed_form >= r.j * r.g_value / 4.0);
        CHECK(r.lower >= r.restricted);
    }
    CHECK(ratios.back().ratio / ratios.front().ratio > 5.0);
}

TEST_CASE("the smallest instance") {
    const auto ratios = verify_comb(build_comb(GSpec::log1p(), ASpec::linear(), 1));
    REQUIRE(ratios.size() == 1);
    CHECK(ratios[0].ratio >= 0.25);
}

TEST_CASE("boundary distance on the plateau equals the next tooth abscissa") {
    const CombConstruction cc = build_comb(GSpec::log1p(), ASpec::linear(), 10);
    const auto slits = slits_of(cc);
    for (int j = 1; j <= cc.J(); ++j) {
        for (double s : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            const double r = cc.x[j - 1] + s * (cc.b[j] - cc.x[j - 1]);
            const Complex w{0.0, r};
            CHECK(delta(cc.domain, w) == Approx(cc.a[j]).epsilon(1e-12));
            CHECK(oracle::comb_delta(slits, w) == Approx(cc.a[j]).epsilon(1e-12));
        }
    }
}

TEST_CASE("the comb is symmetric about the imaginary axis") {
    const CombConstruction cc = build_comb(GSpec::sqrt(), ASpec::linear(), 4);
    for (double x : {0.3, 0.9, 1.7, 3.2})
        for (double y : {-2.0, 0.5, 3.0, 10.0}) {
            if (!cc.domain.contains({x, y})) continue;
            CHECK(delta(cc.domain, {x, y}) == delta(cc.domain, {-x, y}));
        }
    CHECK(cc.domain.as<Comb>().teeth.size() == cc.a.size());
}
