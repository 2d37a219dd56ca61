// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "geomprob/geometry.hpp"

namespace geomprob {

// Probability that a triangle with three independent uniform vertices on the
// unit circle contains the point at distance r from the center:
//   P(r) = 1/4 - 3/(2*pi^2) * Li2(r^2).
// Decreases from P(0) = 1/4 to P(1) = 0.
double p_contain(InteriorPoint x);

// Radial CDF of the intersection point of two random chords, conditioned on
// the chords intersecting inside the disk: F(r) = 6/pi^2 * Li2(r^2) on [0,1].
double chord_cdf(double r);

// Probability that the line through a random point on the left circle and a
// random point on the middle circle (equivalently, through two random points
// on the middle circle) of three collinear tangent unit circles meets the
// right circle:
//   3/4 - 2/pi^2 * (3/8 ln^2 2 + Li2(-sqrt 2) + 3 Li2(1/sqrt 2)).
double three_circle_probability();

}  // namespace geomprob
