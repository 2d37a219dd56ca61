// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "geomprob/geometry.hpp"

namespace geomprob {

// Result of a Bernoulli Monte Carlo experiment. Identical (experiment,
// parameters, seed, trials) produce an identical estimate regardless of the
// worker count: trials map to fixed counter windows and workers only add
// integer success counts.
struct McEstimate {
    std::string experiment;
    double p_hat = 0.0;
    std::uint64_t trials = 0;
    double std_err = 0.0;  // sqrt(p_hat (1 - p_hat) / trials)
    std::uint64_t seed = 0;
};

// Fraction of inscribed triangles (three uniform vertex angles) containing
// the point (r, 0). workers = 0 uses all hardware threads.
McEstimate simulate_triangle(InteriorPoint x, std::uint64_t trials,
                             std::uint64_t seed, unsigned workers = 0);

// Same experiment with every vertex angle shifted by `rotation` radians;
// the estimate must agree with the unrotated one within Monte Carlo noise.
McEstimate simulate_triangle_rotated(InteriorPoint x, double rotation,
                                     std::uint64_t trials, std::uint64_t seed,
                                     unsigned workers = 0);

struct ChordSimResult {
    std::vector<McEstimate> estimates;  // empirical CDF at each requested radius
    std::uint64_t attempts = 0;         // chord pairs drawn, accepted or not
    McEstimate acceptance;              // acceptance-rate diagnostic (exact: 1/3)
};

// Draw pairs of random chords, keep only pairs whose open segments intersect
// (the law conditioned on the intersection lying inside the disk), and report
// the empirical CDF of the intersection's distance from the center at each
// radius of r_grid. `trials` counts accepted pairs; attempts are consumed in
// counter order until exactly `trials` of them are accepted.
ChordSimResult simulate_chords(const std::vector<double>& r_grid,
                               std::uint64_t trials, std::uint64_t seed,
                               unsigned workers = 0);

struct ThreeCircleResult {
    McEstimate ab;
    McEstimate bc;
};

// Three unit circles centered at (-2,0), (0,0), (2,0). A is uniform on the
// left circle, B and C on the middle one; estimates the probabilities that
// the full lines AB and BC meet the right circle (tangency counts).
ThreeCircleResult simulate_three_circles(std::uint64_t trials,
                                         std::uint64_t seed,
                                         unsigned workers = 0);

}  // namespace geomprob
