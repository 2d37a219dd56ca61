// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>

namespace geomprob::kernels {

// ---------------------------------------------------------------------------
// Counter-based random numbers.
//
// Draw `c` under seed `s` is
//
//     mix64(mix64(s) + (c + 1) * 0x9E3779B97F4A7C15)
//
// where mix64 is the splitmix64 finalizer
//
//     z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9;
//     z ^= z >> 27;  z *= 0x94D049BB133111EB;
//     z ^= z >> 31;
//
// (for seed 0 this reproduces the reference splitmix64 stream). Each trial
// reads a fixed window of counters, so an estimate depends only on
// (seed, trial index), never on how trials are partitioned across workers.
// These constants are part of the tool's output contract; changing them
// changes every simulation result.
// ---------------------------------------------------------------------------

inline constexpr std::uint64_t golden_gamma = 0x9E3779B97F4A7C15ULL;

inline constexpr std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

inline constexpr std::uint64_t seed_base(std::uint64_t seed) { return mix64(seed); }

inline constexpr std::uint64_t draw_u64(std::uint64_t base, std::uint64_t counter) {
    return mix64(base + (counter + 1) * golden_gamma);
}

// Upper 52 bits mapped to [0, 1).
inline constexpr double to_unit(std::uint64_t bits) {
    return double(bits >> 12) * 0x1p-52;
}

// Counters consumed per trial (the counter layout of each experiment):
//   triangle:      3  (one vertex angle each)
//   chords:        4  (two endpoint angles per chord)
//   three-circle:  4  (three angles plus one spare for duplicate resampling)
inline constexpr std::uint64_t triangle_draws = 3;
inline constexpr std::uint64_t chord_draws = 4;
inline constexpr std::uint64_t three_circle_draws = 4;

// ---------------------------------------------------------------------------
// (cos, sin) of 2*pi*u for u in [0, 1).
//
// The quadrant reduction is exact: v = 4u, k = nearest integer (default
// round-to-nearest-even mode), f = v - k with |f| <= 1/2, both computed
// without rounding error. The residual feeds odd/even polynomials in f
// whose truncation error is below 1e-20; total error is a couple of ulps.
// The AVX2 variant mirrors every floating-point operation of this scalar
// form (explicit fma included), so the two produce bit-identical results.
// ---------------------------------------------------------------------------

struct SinCos {
    double c, s;
};

// Taylor coefficients of sin((pi/2) f) / f and cos((pi/2) f) in powers of f^2.
inline constexpr double sincos_sin_coeff[10] = {
    1.5707963267948966,      -0.64596409750624625,    0.079692626246167045,
    -0.0046817541353186881,  0.00016044118478735982,  -3.5988432352120853e-06,
    5.6921729219679268e-08,  -6.6880351098114672e-10, 6.0669357311061957e-12,
    -4.3770654673137423e-14,
};
inline constexpr double sincos_cos_coeff[10] = {
    1.0,                     -1.2337005501361698,     0.25366950790104801,
    -0.020863480763352961,   0.00091926027483942658,  -2.5202042373060605e-05,
    4.7108747788181715e-07,  -6.3866030837918522e-09, 6.5659631149794724e-11,
    -5.2944002007346238e-13,
};

inline SinCos sincos_turn(double u) {
    double v = 4.0 * u;
    double k = std::nearbyint(v);
    double f = v - k;
    double f2 = f * f;
    double ps = sincos_sin_coeff[9];
    for (int i = 8; i >= 0; --i) ps = std::fma(ps, f2, sincos_sin_coeff[i]);
    double s = f * ps;
    double pc = sincos_cos_coeff[9];
    for (int i = 8; i >= 0; --i) pc = std::fma(pc, f2, sincos_cos_coeff[i]);
    switch (int(k) & 3) {
        case 0: return {pc, s};
        case 1: return {-s, pc};
        case 2: return {-pc, -s};
        default: return {s, -pc};
    }
}

// ---------------------------------------------------------------------------
// Batch trial kernels. Every function is a pure map from (seed, counter
// range, parameters) to integer counts; chunking a range over workers and
// summing reproduces the single-range result exactly.
// ---------------------------------------------------------------------------

struct ThreeCircleHits {
    std::uint64_t ab = 0;
    std::uint64_t bc = 0;
};

struct KernelSet {
    const char* name;

    // Trials [first, first + n) of the inscribed-triangle experiment against
    // the query point (r, 0); vertex angles are rotated by rot_turn turns.
    std::uint64_t (*triangle_hits)(std::uint64_t seed, std::uint64_t first,
                                   std::uint64_t n, double r, double rot_turn);

    // Chord-pair attempts [first, first + n). Returns how many attempts were
    // accepted (chords intersecting inside the disk) and, for each radius,
    // adds to hits[k] the accepted attempts whose intersection lies within
    // radii[k] of the center. Acceptance itself places the point inside the
    // disk, so radii[k] >= 1 counts every accepted attempt.
    std::uint64_t (*chord_hits)(std::uint64_t seed, std::uint64_t first,
                                std::uint64_t n, const double* radii,
                                std::size_t n_radii, std::uint64_t* hits);

    // Trials [first, first + n) of the tangent-circles experiment; counts
    // how often lines AB and BC meet the right circle.
    ThreeCircleHits (*three_circle_hits)(std::uint64_t seed, std::uint64_t first,
                                         std::uint64_t n);

    // Elementwise (cos, sin) of 2*pi*u[i].
    void (*sincos_batch)(const double* u, double* c, double* s, std::size_t n);
};

const KernelSet& scalar_kernels();

// AVX2+FMA implementation, or nullptr when the CPU lacks those extensions.
const KernelSet* avx2_kernels();

// Best available implementation; GEOMPROB_FORCE_SCALAR=1 pins the scalar one.
const KernelSet& active_kernels();

}  // namespace geomprob::kernels
