// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "geomprob/quadrature.hpp"

namespace geomprob {

// Real dilogarithm Li2(x) for x <= 1, accurate to ~1e-13 relative to
// max(1, |Li2(x)|). Throws std::domain_error for x > 1 (or NaN).
//
// Evaluation regions:
//   x in [-1/2, 1/2]   power series, stopped by the geometric tail bound
//   x in (1/2, 1)      reflection  Li2(x) = pi^2/6 - ln(x)ln(1-x) - Li2(1-x)
//   x in [-1, -1/2)    Landen      Li2(x) = -ln^2(1-x)/2 - Li2(x/(x-1))
//   x < -1             inversion   Li2(x) = -pi^2/6 - ln^2(-x)/2 - Li2(1/x)
//   x in {0, 1}        exact endpoint values
double li2(double x);

// Redundant route for x in (-1, -1/2] through the half-square identity
// Li2(x) = Li2(x^2)/2 - Li2(-x); exercises the reflection region, so it
// shares no region with the Landen path li2 uses there.
double li2_square_identity(double x);

// Brute-force oracle: -integral from 0 to x of ln(1-u)/u du, evaluated by
// panel-doubled quadrature with estimated absolute error <= tol. For x near
// or at 1 the endpoint log singularity is removed by the substitution
// u = 1 - e^{-t}, which turns the tail into the smooth t/(e^t - 1).
// Independent of the series/functional-equation path above.
QuadResult li2_integral_oracle(double x, double tol);

}  // namespace geomprob
