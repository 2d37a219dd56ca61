// SPDX-License-Identifier: Apache-2.0
#include "geomprob/dilog.hpp"

#include <cmath>

namespace geomprob {

namespace {

constexpr double pi_sq_over_6 = std::numbers::pi * std::numbers::pi / 6.0;

// Direct power series sum_{n>=1} x^n / n^2 for |x| <= 1/2. After adding
// term n the remaining tail is bounded by |x|^{n+1} / ((n+1)^2 (1 - |x|)),
// and the loop stops once that bound drops below the target.
double li2_series(double x) {
    const double ax = std::abs(x);
    double sum = x;
    double xn = x;
    for (int n = 2; n <= 200; ++n) {
        xn *= x;
        sum += xn / (double(n) * double(n));
        double axn1 = std::abs(xn) * ax;
        double tail = axn1 / ((double(n + 1) * double(n + 1)) * (1.0 - ax));
        if (tail < 1e-17) break;
    }
    return sum;
}

}  // namespace

double li2(double x) {
    if (!(x <= 1.0)) throw std::domain_error("outside real branch");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return pi_sq_over_6;
    if (x < -1.0) {
        double l = std::log(-x);
        return -pi_sq_over_6 - 0.5 * l * l - li2(1.0 / x);
    }
    if (x < -0.5) {
        double l = std::log1p(-x);
        return -0.5 * l * l - li2_series(x / (x - 1.0));
    }
    if (x <= 0.5) return li2_series(x);
    // x in (1/2, 1)
    double y = 1.0 - x;
    return pi_sq_over_6 - std::log(x) * std::log(y) - li2_series(y);
}

double li2_square_identity(double x) {
    if (!(x > -1.0 && x <= -0.5))
        throw std::domain_error("half-square route covers (-1, -1/2]");
    return 0.5 * li2(x * x) - li2(-x);
}

QuadResult li2_integral_oracle(double x, double tol) {
    if (!(x <= 1.0)) throw std::domain_error("outside real branch");
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    if (x == 0.0) return {0.0, 0.0, 1};

    // -ln(1-u)/u, extended by continuity to 1 at u = 0
    auto integrand = [](double u) {
        if (u == 0.0) return 1.0;
        return -std::log1p(-u) / u;
    };

    // Pieces accumulate into one result; a piece that exhausts its budget
    // still contributes its best value, and the combined failure carries the
    // composite estimate.
    QuadResult total{0.0, 0.0, 0};
    bool budget_hit = false;
    auto accumulate = [&](auto&& f, double a, double b, double piece_tol,
                          double scale) {
        QuadResult piece;
        try {
            piece = integrate_gl16(f, a, b, piece_tol);
        } catch (const QuadratureBudgetError& e) {
            piece = e.best;
            budget_hit = true;
        }
        total.value += scale * piece.value;
        total.abs_error_estimate += piece.abs_error_estimate;
        total.evaluations += piece.evaluations;
    };

    if (x < 0.0) {
        accumulate(integrand, x, 0.0, tol, -1.0);
    } else if (x <= 0.5) {
        accumulate(integrand, 0.0, x, tol, 1.0);
    } else {
        // Split at 1/2 and substitute u = 1 - e^{-t} on the upper piece,
        // where the integrand becomes t/(e^t - 1). For x = 1 the range is
        // infinite; truncating at t = 60 leaves a tail below
        // (61)e^{-60} ~ 5e-25, which is folded into the error estimate.
        accumulate(integrand, 0.0, 0.5, tol / 2.0, 1.0);
        auto smooth_tail = [](double t) { return t / std::expm1(t); };
        double t_hi;
        if (x == 1.0) {
            t_hi = 60.0;
            total.abs_error_estimate += (t_hi + 1.0) * std::exp(-t_hi);
        } else {
            t_hi = -std::log1p(-x);
        }
        accumulate(smooth_tail, std::log(2.0), t_hi, tol / 2.0, 1.0);
    }
    if (budget_hit || total.abs_error_estimate > tol)
        throw QuadratureBudgetError(total);
    return total;
}

}  // namespace geomprob
