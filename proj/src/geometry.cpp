// SPDX-License-Identifier: Apache-2.0
#include "geomprob/geometry.hpp"

namespace geomprob {

int side_of(Point query, CirclePoint from, CirclePoint to) {
    if (from.theta == to.theta)
        throw std::invalid_argument("degenerate directed line");
    return line_side(query, from.point(), to.point());
}

int orientation(CirclePoint a, CirclePoint b, CirclePoint c) {
    if (a.theta == b.theta || b.theta == c.theta || a.theta == c.theta)
        throw std::invalid_argument("degenerate triangle");
    Point pa = a.point(), pb = b.point(), pc = c.point();
    double det = pa.x * (pb.y - pc.y) + pb.x * (pc.y - pa.y) + pc.x * (pa.y - pb.y);
    return det > 0.0 ? -1 : +1;  // positive determinant = counterclockwise
}

bool contains(CirclePoint a, CirclePoint b, CirclePoint c, Point x) {
    int o = orientation(a, b, c);
    return side_of(x, a, b) == o && side_of(x, b, c) == o && side_of(x, c, a) == o;
}

bool check_relation1(CirclePoint a, CirclePoint b, CirclePoint c, Point x) {
    int in = contains(a, b, c, x) ? 1 : 0;
    int lhs = (2 * in + 1) * orientation(a, b, c);
    int rhs = side_of(x, a, b) + side_of(x, b, c) + side_of(x, c, a);
    return lhs == rhs;
}

bool check_relation3(CirclePoint a, CirclePoint b, CirclePoint c, Point x) {
    int in = contains(a, b, c, x) ? 1 : 0;
    Point pa = a.point(), pb = b.point(), pc = c.point();
    int rhs = side_of(x, a, b) * side_of(pc, a, b)
            - line_side(pa, x, pc) * line_side(pb, x, pc);
    return 2 * in == rhs;
}

}  // namespace geomprob
