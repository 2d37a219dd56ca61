// SPDX-License-Identifier: Apache-2.0
#pragma once

// Per-trial scalar reference logic shared by the scalar kernel set and the
// SIMD tail paths. The SIMD main loops mirror these operations one for one;
// any change here must be reflected there to preserve bit equality.

#include "geomprob/geometry.hpp"
#include "geomprob/kernels.hpp"

namespace geomprob::kernels::impl {

inline double add_turn(double u, double rot_turn) {
    double v = u + rot_turn;
    if (v >= 1.0) v -= 1.0;
    return v;
}

inline bool triangle_trial(std::uint64_t base, std::uint64_t trial, double r,
                           double rot_turn) {
    const std::uint64_t c0 = trial * triangle_draws;
    double ua = add_turn(to_unit(draw_u64(base, c0 + 0)), rot_turn);
    double ub = add_turn(to_unit(draw_u64(base, c0 + 1)), rot_turn);
    double uc = add_turn(to_unit(draw_u64(base, c0 + 2)), rot_turn);
    SinCos a = sincos_turn(ua);
    SinCos b = sincos_turn(ub);
    SinCos c = sincos_turn(uc);
    // same determinant and edge crosses as the geometry predicates
    double det = a.c * (b.s - c.s) + b.c * (c.s - a.s) + c.c * (a.s - b.s);
    double e1 = (b.c - a.c) * (0.0 - a.s) - (b.s - a.s) * (r - a.c);
    double e2 = (c.c - b.c) * (0.0 - b.s) - (c.s - b.s) * (r - b.c);
    double e3 = (a.c - c.c) * (0.0 - c.s) - (a.s - c.s) * (r - c.c);
    bool o = det > 0.0;
    return (e1 > 0.0) == o && (e2 > 0.0) == o && (e3 > 0.0) == o;
}

struct ChordAttempt {
    bool accepted;
    double dist2;  // squared distance of the chord intersection from origin
};

inline ChordAttempt chord_attempt(std::uint64_t base, std::uint64_t attempt) {
    const std::uint64_t c0 = attempt * chord_draws;
    double u1 = to_unit(draw_u64(base, c0 + 0));
    double u2 = to_unit(draw_u64(base, c0 + 1));
    double u3 = to_unit(draw_u64(base, c0 + 2));
    double u4 = to_unit(draw_u64(base, c0 + 3));
    // the open chord segments cross iff exactly one endpoint of the second
    // chord lies on the counterclockwise arc from u1 to u2
    double da = u2 - u1;
    if (da < 0.0) da += 1.0;
    double db1 = u3 - u1;
    if (db1 < 0.0) db1 += 1.0;
    double db2 = u4 - u1;
    if (db2 < 0.0) db2 += 1.0;
    bool accepted = (db1 < da) != (db2 < da);
    if (!accepted) return {false, 0.0};
    SinCos p1 = sincos_turn(u1);
    SinCos p2 = sincos_turn(u2);
    SinCos q1 = sincos_turn(u3);
    SinCos q2 = sincos_turn(u4);
    double d1x = p2.c - p1.c, d1y = p2.s - p1.s;
    double d2x = q2.c - q1.c, d2y = q2.s - q1.s;
    double denom = d1x * d2y - d1y * d2x;
    double wx = q1.c - p1.c, wy = q1.s - p1.s;
    double t = (wx * d2y - wy * d2x) / denom;
    double ix = p1.c + t * d1x;
    double iy = p1.s + t * d1y;
    return {true, ix * ix + iy * iy};
}

inline void accumulate_chord_hits(const ChordAttempt& at, const double* radii,
                                  std::size_t n_radii, std::uint64_t* hits) {
    if (!at.accepted) return;
    for (std::size_t k = 0; k < n_radii; ++k)
        if (radii[k] >= 1.0 || at.dist2 <= radii[k] * radii[k]) ++hits[k];
}

inline void three_circle_trial(std::uint64_t base, std::uint64_t trial,
                               bool& ab, bool& bc) {
    const std::uint64_t c0 = trial * three_circle_draws;
    double ua = to_unit(draw_u64(base, c0 + 0));
    double ub = to_unit(draw_u64(base, c0 + 1));
    double uc = to_unit(draw_u64(base, c0 + 2));
    // resample a duplicated middle-circle point from the spare draw; A lives
    // on the left circle and cannot coincide with B or C
    if (uc == ub) uc = to_unit(draw_u64(base, c0 + 3));
    if (uc == ub) uc = add_turn(uc, 0.5);
    SinCos a = sincos_turn(ua);
    SinCos b = sincos_turn(ub);
    SinCos c = sincos_turn(uc);
    Point pa{-2.0 + a.c, a.s};
    Point pb{b.c, b.s};
    Point pc{c.c, c.s};
    const Point target{2.0, 0.0};
    ab = line_meets_unit_circle(pa, pb, target);
    bc = line_meets_unit_circle(pb, pc, target);
}

}  // namespace geomprob::kernels::impl
