// SPDX-License-Identifier: Apache-2.0
#include "geomprob/kernels.hpp"

#include "kernel_impl.hpp"

namespace geomprob::kernels {

namespace {

std::uint64_t triangle_hits_scalar(std::uint64_t seed, std::uint64_t first,
                                   std::uint64_t n, double r, double rot_turn) {
    const std::uint64_t base = seed_base(seed);
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < n; ++i)
        hits += impl::triangle_trial(base, first + i, r, rot_turn);
    return hits;
}

std::uint64_t chord_hits_scalar(std::uint64_t seed, std::uint64_t first,
                                std::uint64_t n, const double* radii,
                                std::size_t n_radii, std::uint64_t* hits) {
    const std::uint64_t base = seed_base(seed);
    std::uint64_t accepted = 0;
    for (std::uint64_t j = 0; j < n; ++j) {
        impl::ChordAttempt at = impl::chord_attempt(base, first + j);
        accepted += at.accepted;
        impl::accumulate_chord_hits(at, radii, n_radii, hits);
    }
    return accepted;
}

ThreeCircleHits three_circle_hits_scalar(std::uint64_t seed, std::uint64_t first,
                                         std::uint64_t n) {
    const std::uint64_t base = seed_base(seed);
    ThreeCircleHits counts;
    for (std::uint64_t i = 0; i < n; ++i) {
        bool ab = false, bc = false;
        impl::three_circle_trial(base, first + i, ab, bc);
        counts.ab += ab;
        counts.bc += bc;
    }
    return counts;
}

void sincos_batch_scalar(const double* u, double* c, double* s, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        SinCos cs = sincos_turn(u[i]);
        c[i] = cs.c;
        s[i] = cs.s;
    }
}

}  // namespace

const KernelSet& scalar_kernels() {
    static const KernelSet set{
        "scalar",
        triangle_hits_scalar,
        chord_hits_scalar,
        three_circle_hits_scalar,
        sincos_batch_scalar,
    };
    return set;
}

}  // namespace geomprob::kernels
