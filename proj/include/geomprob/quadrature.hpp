// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>

#include "geomprob/geometry.hpp"

namespace geomprob {

struct QuadResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    std::int64_t evaluations = 0;
};

// Thrown when an integral fails to reach the requested tolerance within its
// evaluation budget; carries the best result obtained so far.
class QuadratureBudgetError : public std::runtime_error {
public:
    QuadResult best;
    explicit QuadratureBudgetError(QuadResult b)
        : std::runtime_error("quadrature tolerance not reached within evaluation budget"),
          best(b) {}
};

// 16-node Gauss-Legendre rule on [-1, 1], nodes/weights solved at first use.
// Returns {positive nodes, weights}, 8 each; the rule is symmetric.
const std::array<double, 8>& gl16_nodes();
const std::array<double, 8>& gl16_weights();

namespace detail {

template <class F>
inline void gl16_panel(F&& f, double a, double b, double& sum, double& abs_sum) {
    const auto& xs = gl16_nodes();
    const auto& ws = gl16_weights();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double s = 0.0, sa = 0.0;
    for (int i = 0; i < 8; ++i) {
        double dx = half * xs[i];
        double fp = f(mid + dx);
        double fm = f(mid - dx);
        s += ws[i] * (fp + fm);
        sa += ws[i] * (std::abs(fp) + std::abs(fm));
    }
    sum += half * s;
    abs_sum += half * sa;
}

}  // namespace detail

// Composite 16-node Gauss-Legendre over [a, b] with panel doubling: the
// panel count doubles until two successive composite values differ by less
// than `tol`; that last difference is the reported error estimate (floored
// at a few ulps of the absolute integral). Panels are summed in index
// order, so results do not depend on how callers schedule work.
template <class F>
QuadResult integrate_gl16(F&& f, double a, double b, double tol,
                          std::int64_t max_evals = std::int64_t{1} << 22) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    std::int64_t evals = 0;
    double prev = std::numeric_limits<double>::quiet_NaN();
    double value = 0.0, diff = std::numeric_limits<double>::infinity();
    for (int panels = 1;; panels *= 2) {
        double sum = 0.0, abs_sum = 0.0;
        const double width = (b - a) / panels;
        for (int p = 0; p < panels; ++p)
            detail::gl16_panel(f, a + p * width, a + (p + 1) * width, sum, abs_sum);
        evals += std::int64_t{16} * panels;
        value = sum;
        // the estimate can never drop below the rounding noise of the sum
        double floor_err = 16.0 * std::numeric_limits<double>::epsilon() * abs_sum;
        if (!std::isnan(prev)) diff = std::abs(value - prev);
        prev = value;
        // require at least two refinements before trusting agreement
        if (panels >= 4 && diff < tol) {
            double estimate = std::max(diff, floor_err);
            if (estimate <= tol) return {value, estimate, evals};
            // tolerance sits below achievable precision; further panels
            // cannot shrink the floor
            throw QuadratureBudgetError({value, estimate, evals});
        }
        if (std::int64_t{16} * panels * 2 + evals > max_evals)
            throw QuadratureBudgetError({value, std::max(diff, floor_err), evals});
    }
}

// Signed normalized difference of the two arcs that the line through X=(r,0)
// and the circle point c cuts from the circle, i.e. the mean of the side
// predicate over a uniform circle point. Magnitude comes from the half-plane
// argument, (2/pi)*|arg(1 - r e^{i theta})|; the sign is pinned by evaluating
// the side predicate at one probe point on the circle (the antipode of c).
double arc_difference(InteriorPoint x, CirclePoint c);

// Same quantity by explicit construction: intersect line Xc with the circle,
// measure both arcs, orient by a sampled side predicate. Independent oracle
// for arc_difference.
double arc_difference_geometric(InteriorPoint x, CirclePoint c);

// I(r) = integral over [0, 2*pi] of arg(1 - r e^{i theta})^2 d theta.
QuadResult i_of_r(InteriorPoint x, double tol);

// dI/dr by quadrature: -2 * integral of sin(theta) / (1 + r^2 - 2 r cos(theta))
// * arg(1 - r e^{i theta}) d theta. Closed form is -2*pi*ln(1 - r^2)/r.
QuadResult di_dr_quadrature(InteriorPoint x, double tol);

// Containment probability through the integral route: 1/4 - 3/(2*pi^3)*I(r).
double p_from_integral(InteriorPoint x, double tol);

// Integral of arc_difference^2 over the circle point, d mu = d theta/(2*pi).
// Equals (1 - 4*P(r))/3.
QuadResult dif_square_integral(InteriorPoint x, double tol);

}  // namespace geomprob
