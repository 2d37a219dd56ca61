// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "geomprob/closed_forms.hpp"
#include "geomprob/montecarlo.hpp"

using namespace geomprob;

TEST_CASE("triangle estimates sit inside the 5-sigma band") {
    McEstimate center = simulate_triangle(InteriorPoint(0.0), 1'000'000, 0);
    CHECK(std::abs(center.p_hat - 0.25) < 5.0 * center.std_err);
    McEstimate half = simulate_triangle(InteriorPoint(0.5), 1'000'000, 0);
    CHECK(std::abs(half.p_hat - p_contain(InteriorPoint(0.5))) < 5.0 * half.std_err);
    CHECK(half.trials == 1'000'000);
    CHECK(half.seed == 0);
    CHECK(half.std_err ==
          doctest::Approx(std::sqrt(half.p_hat * (1 - half.p_hat) / 1e6)));
}

TEST_CASE("boundary point is contained only through ties") {
    McEstimate edge = simulate_triangle(InteriorPoint(1.0), 1'000'000, 1);
    CHECK(edge.p_hat <= 1e-5);
}

TEST_CASE("worker count never changes an estimate") {
    for (unsigned workers : {1u, 2u, 3u, 7u}) {
        McEstimate e = simulate_triangle(InteriorPoint(0.5), 200'000, 9, workers);
        McEstimate ref = simulate_triangle(InteriorPoint(0.5), 200'000, 9, 1);
        CHECK(e.p_hat == ref.p_hat);
        CHECK(e.std_err == ref.std_err);
    }
}

TEST_CASE("rotating every vertex leaves the estimate statistically unchanged") {
    InteriorPoint x(0.5);
    McEstimate plain = simulate_triangle(x, 400'000, 0);
    McEstimate turned = simulate_triangle_rotated(x, 1.0, 400'000, 0);
    double combined = std::sqrt(plain.std_err * plain.std_err +
                                turned.std_err * turned.std_err);
    CHECK(std::abs(plain.p_hat - turned.p_hat) < 5.0 * combined);
    // rotation by a full turn is the identity on the sample space
    McEstimate full = simulate_triangle_rotated(x, two_pi, 400'000, 0);
    CHECK(full.p_hat == plain.p_hat);
}

TEST_CASE("chord CDF estimates and acceptance diagnostics") {
    std::vector<double> radii{0.3, 0.6, 0.9, 1.0};
    ChordSimResult sim = simulate_chords(radii, 200'000, 0);
    REQUIRE(sim.estimates.size() == 4);
    for (std::size_t k = 0; k < 3; ++k) {
        double closed = chord_cdf(radii[k]);
        CHECK(std::abs(sim.estimates[k].p_hat - closed) <
              5.0 * sim.estimates[k].std_err);
        CHECK(sim.estimates[k].trials == 200'000);
    }
    // conditioning makes the CDF at r = 1 exactly one
    CHECK(sim.estimates[3].p_hat == 1.0);
    // two chords intersect with probability exactly 1/3
    CHECK(std::abs(sim.acceptance.p_hat - 1.0 / 3.0) < 5.0 * sim.acceptance.std_err);
    CHECK(sim.attempts > 200'000);
}

TEST_CASE("chord simulation is worker-count independent") {
    std::vector<double> radii{0.5};
    ChordSimResult a = simulate_chords(radii, 150'000, 4, 1);
    ChordSimResult b = simulate_chords(radii, 150'000, 4, 3);
    CHECK(a.attempts == b.attempts);
    CHECK(a.estimates[0].p_hat == b.estimates[0].p_hat);
    CHECK(a.acceptance.p_hat == b.acceptance.p_hat);
}

TEST_CASE("three tangent circles") {
    ThreeCircleResult tc = simulate_three_circles(1'000'000, 0);
    double closed = three_circle_probability();
    CHECK(std::abs(tc.ab.p_hat - closed) < 5.0 * tc.ab.std_err);
    CHECK(std::abs(tc.bc.p_hat - closed) < 5.0 * tc.bc.std_err);
    double combined =
        std::sqrt(tc.ab.std_err * tc.ab.std_err + tc.bc.std_err * tc.bc.std_err);
    CHECK(std::abs(tc.ab.p_hat - tc.bc.p_hat) < 5.0 * combined);
    ThreeCircleResult again = simulate_three_circles(1'000'000, 0, 2);
    CHECK(again.ab.p_hat == tc.ab.p_hat);
    CHECK(again.bc.p_hat == tc.bc.p_hat);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(simulate_triangle(InteriorPoint(0.5), 0, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(simulate_chords({0.5}, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(simulate_chords({1.5}, 10, 0), std::domain_error);
    CHECK_THROWS_AS(simulate_three_circles(0, 0), std::invalid_argument);
}
