// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace geomprob {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

// Point on the unit circle, stored as its angle in [0, 2*pi).
struct CirclePoint {
    double theta = 0.0;

    // Wraps an arbitrary angle into [0, 2*pi).
    static CirclePoint from_angle(double angle) {
        double t = std::fmod(angle, two_pi);
        if (t < 0.0) t += two_pi;
        if (t >= two_pi) t = 0.0;  // fmod can land on 2*pi after the add
        return CirclePoint{t};
    }

    Point point() const { return {std::cos(theta), std::sin(theta)}; }
};

// Query point at distance r from the center, canonically placed at (r, 0).
// The containment probability depends only on this ratio.
struct InteriorPoint {
    double r;

    explicit InteriorPoint(double r_) : r(r_) {
        if (!(r_ >= 0.0 && r_ <= 1.0))
            throw std::domain_error("interior point ratio must lie in [0, 1]");
    }

    Point point() const { return {r, 0.0}; }
};

// cross(b - a, q - a); positive when q lies strictly left of the directed
// line a -> b (standard orientation, y upward).
inline double cross_from(Point a, Point b, Point q) {
    return (b.x - a.x) * (q.y - a.y) - (b.y - a.y) * (q.x - a.x);
}

// +1 when q is right of, or on, the directed line a -> b; -1 when left.
// The on-line case deliberately maps to +1.
inline int line_side(Point q, Point a, Point b) {
    return cross_from(a, b, q) > 0.0 ? -1 : +1;
}

// True when the full line through p and q meets the closed unit disk
// centered at `center`; tangency counts as meeting.
inline bool line_meets_unit_circle(Point p, Point q, Point center) {
    double ux = q.x - p.x, uy = q.y - p.y;
    double vx = center.x - p.x, vy = center.y - p.y;
    double cr = ux * vy - uy * vx;
    return cr * cr <= ux * ux + uy * uy;
}

// Side predicate for directed chords: +1 iff `query` is right of, or on,
// the line from -> to. Throws on a degenerate (from == to) line.
int side_of(Point query, CirclePoint from, CirclePoint to);

// +1 iff triangle abc is oriented clockwise, -1 iff counterclockwise.
// Uses the three-point determinant, a different expression than side_of,
// so the relation orientation(a,b,c) == side_of(c,a,b) stays a real test.
int orientation(CirclePoint a, CirclePoint b, CirclePoint c);

// True iff x lies inside triangle abc: all three directed-edge sides of x
// agree with the triangle orientation. On-edge x inherits the side_of
// tie-break instead of erroring.
bool contains(CirclePoint a, CirclePoint b, CirclePoint c, Point x);

// (2*[x in abc] + 1) * orientation == sum of the three edge sides.
bool check_relation1(CirclePoint a, CirclePoint b, CirclePoint c, Point x);

// 2*[x in abc] == side(x|ab)*side(c|ab) - side(a|xc)*side(b|xc).
bool check_relation3(CirclePoint a, CirclePoint b, CirclePoint c, Point x);

}  // namespace geomprob
