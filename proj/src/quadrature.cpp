// SPDX-License-Identifier: Apache-2.0
#include "geomprob/quadrature.hpp"

#include <cmath>

namespace geomprob {

namespace {

struct Gl16Rule {
    std::array<double, 8> nodes;
    std::array<double, 8> weights;
};

// Newton iteration on the Legendre polynomial recurrence (the usual gauleg
// construction); roots converge to full double precision in a few steps.
Gl16Rule build_gl16() {
    constexpr int n = 16;
    Gl16Rule rule{};
    for (int i = 0; i < 8; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2 * j + 1) * z * p2 - j * p3) / (j + 1);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= 1e-15 * std::abs(z)) {
                // one polishing step after convergence
                p1 = 1.0; p2 = 0.0;
                for (int j = 0; j < n; ++j) {
                    double p3 = p2;
                    p2 = p1;
                    p1 = ((2 * j + 1) * z * p2 - j * p3) / (j + 1);
                }
                pp = n * (z * p1 - p2) / (z * z - 1.0);
                z -= p1 / pp;
                break;
            }
        }
        rule.nodes[i] = z;  // z > 0, descending toward 0
        rule.weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
    return rule;
}

const Gl16Rule& gl16_rule() {
    static const Gl16Rule rule = build_gl16();
    return rule;
}

// arg(1 - r e^{i theta}); lies in (-pi/2, pi/2) because the real part is
// positive for r < 1.
inline double half_plane_arg(double r, double theta) {
    return std::atan2(-r * std::sin(theta), 1.0 - r * std::cos(theta));
}

}  // namespace

const std::array<double, 8>& gl16_nodes() { return gl16_rule().nodes; }
const std::array<double, 8>& gl16_weights() { return gl16_rule().weights; }

double arc_difference(InteriorPoint x, CirclePoint c) {
    if (x.r >= 1.0) throw std::domain_error("arc difference requires r < 1");
    Point pc = c.point();
    Point antipode{-pc.x, -pc.y};
    int sign = line_side(antipode, x.point(), pc);
    double mag = (2.0 / std::numbers::pi) * std::abs(half_plane_arg(x.r, c.theta));
    return sign * mag;
}

double arc_difference_geometric(InteriorPoint x, CirclePoint c) {
    if (x.r >= 1.0) throw std::domain_error("arc difference requires r < 1");
    Point px = x.point();
    Point pc = c.point();
    double dx = pc.x - px.x, dy = pc.y - px.y;
    double dd = dx * dx + dy * dy;
    // line parameterized as X + t*(C - X); t = 1 is C, and the product of the
    // roots of |X + tD|^2 = 1 gives the second circle intersection.
    double t2 = (x.r * x.r - 1.0) / dd;
    Point n{px.x + t2 * dx, px.y + t2 * dy};
    double theta_c = std::atan2(pc.y, pc.x);
    double theta_n = std::atan2(n.y, n.x);
    double arc1 = theta_c - theta_n;  // counterclockwise arc from N to C
    if (arc1 < 0.0) arc1 += two_pi;
    double theta_mid = theta_n + 0.5 * arc1;
    Point mid{std::cos(theta_mid), std::sin(theta_mid)};
    int side_mid = line_side(mid, px, pc);
    double frac1 = arc1 / two_pi;
    return side_mid * (2.0 * frac1 - 1.0);
}

QuadResult i_of_r(InteriorPoint x, double tol) {
    if (x.r >= 1.0) throw std::domain_error("I(r) requires r < 1");
    const double r = x.r;
    return integrate_gl16(
        [r](double theta) {
            double a = half_plane_arg(r, theta);
            return a * a;
        },
        0.0, two_pi, tol);
}

QuadResult di_dr_quadrature(InteriorPoint x, double tol) {
    if (!(x.r > 0.0 && x.r < 1.0))
        throw std::domain_error("dI/dr requires r in (0, 1)");
    const double r = x.r;
    QuadResult q = integrate_gl16(
        [r](double theta) {
            double denom = 1.0 + r * r - 2.0 * r * std::cos(theta);
            return std::sin(theta) / denom * half_plane_arg(r, theta);
        },
        0.0, two_pi, tol / 2.0);
    return {-2.0 * q.value, 2.0 * q.abs_error_estimate, q.evaluations};
}

double p_from_integral(InteriorPoint x, double tol) {
    const double pi = std::numbers::pi;
    return 0.25 - 3.0 / (2.0 * pi * pi * pi) * i_of_r(x, tol).value;
}

QuadResult dif_square_integral(InteriorPoint x, double tol) {
    if (x.r >= 1.0) throw std::domain_error("dif square integral requires r < 1");
    const InteriorPoint xi = x;
    QuadResult q = integrate_gl16(
        [xi](double theta) {
            double d = arc_difference(xi, CirclePoint{theta});
            return d * d;
        },
        0.0, two_pi, tol * two_pi);
    return {q.value / two_pi, q.abs_error_estimate / two_pi, q.evaluations};
}

}  // namespace geomprob
