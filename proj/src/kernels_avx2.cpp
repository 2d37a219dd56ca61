// SPDX-License-Identifier: Apache-2.0

// AVX2+FMA variants of the trial kernels. Each vector operation mirrors the
// scalar reference in kernel_impl.hpp exactly (same operations, same order,
// fma only where the scalar code writes std::fma), so per-trial results are
// bit-identical to the scalar kernels; the equivalence tests assert this.

#include "geomprob/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include "kernel_impl.hpp"

namespace geomprob::kernels {

namespace {

inline __m256i mullo64(__m256i a, __m256i b) {
    __m256i a_hi = _mm256_srli_epi64(a, 32);
    __m256i b_hi = _mm256_srli_epi64(b, 32);
    __m256i lolo = _mm256_mul_epu32(a, b);
    __m256i lohi = _mm256_mul_epu32(a, b_hi);
    __m256i hilo = _mm256_mul_epu32(a_hi, b);
    __m256i cross = _mm256_add_epi64(lohi, hilo);
    return _mm256_add_epi64(lolo, _mm256_slli_epi64(cross, 32));
}

inline __m256i mix64_v(__m256i z) {
    z = _mm256_xor_si256(z, _mm256_srli_epi64(z, 30));
    z = mullo64(z, _mm256_set1_epi64x(std::int64_t(0xBF58476D1CE4E5B9ULL)));
    z = _mm256_xor_si256(z, _mm256_srli_epi64(z, 27));
    z = mullo64(z, _mm256_set1_epi64x(std::int64_t(0x94D049BB133111EBULL)));
    z = _mm256_xor_si256(z, _mm256_srli_epi64(z, 31));
    return z;
}

inline __m256i draw_v(std::uint64_t base, __m256i counter) {
    __m256i cp1 = _mm256_add_epi64(counter, _mm256_set1_epi64x(1));
    __m256i step = mullo64(cp1, _mm256_set1_epi64x(std::int64_t(golden_gamma)));
    return mix64_v(_mm256_add_epi64(_mm256_set1_epi64x(std::int64_t(base)), step));
}

inline __m256d to_unit_v(__m256i bits) {
    // 52-bit integer to double via the 2^52 exponent trick, then scale
    __m256i v = _mm256_srli_epi64(bits, 12);
    __m256d d = _mm256_sub_pd(
        _mm256_castsi256_pd(_mm256_or_si256(v, _mm256_set1_epi64x(0x4330000000000000LL))),
        _mm256_set1_pd(0x1p52));
    return _mm256_mul_pd(d, _mm256_set1_pd(0x1p-52));
}

struct SinCosV {
    __m256d c, s;
};

inline SinCosV sincos_turn_v(__m256d u) {
    const __m256d sign_bit = _mm256_set1_pd(-0.0);
    __m256d v = _mm256_mul_pd(_mm256_set1_pd(4.0), u);
    __m256d k = _mm256_round_pd(v, _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d f = _mm256_sub_pd(v, k);
    __m256d f2 = _mm256_mul_pd(f, f);
    __m256d ps = _mm256_set1_pd(sincos_sin_coeff[9]);
    for (int i = 8; i >= 0; --i)
        ps = _mm256_fmadd_pd(ps, f2, _mm256_set1_pd(sincos_sin_coeff[i]));
    __m256d s = _mm256_mul_pd(f, ps);
    __m256d pc = _mm256_set1_pd(sincos_cos_coeff[9]);
    for (int i = 8; i >= 0; --i)
        pc = _mm256_fmadd_pd(pc, f2, _mm256_set1_pd(sincos_cos_coeff[i]));
    // quadrant q = k & 3: swap the pair when q is odd, negate cos for
    // q in {1, 2}, negate sin for q in {2, 3}
    __m256i q = _mm256_cvtepi32_epi64(_mm256_cvtpd_epi32(k));
    __m256i one = _mm256_set1_epi64x(1);
    __m256d swap_m = _mm256_castsi256_pd(
        _mm256_cmpeq_epi64(_mm256_and_si256(q, one), one));
    __m256d b1_m = _mm256_castsi256_pd(
        _mm256_cmpeq_epi64(_mm256_and_si256(_mm256_srli_epi64(q, 1), one), one));
    __m256d cos_neg = _mm256_xor_pd(swap_m, b1_m);
    __m256d cc = _mm256_blendv_pd(pc, s, swap_m);
    __m256d ss = _mm256_blendv_pd(s, pc, swap_m);
    cc = _mm256_xor_pd(cc, _mm256_and_pd(cos_neg, sign_bit));
    ss = _mm256_xor_pd(ss, _mm256_and_pd(b1_m, sign_bit));
    return {cc, ss};
}

inline __m256d add_turn_v(__m256d u, __m256d rot) {
    const __m256d ones = _mm256_set1_pd(1.0);
    __m256d v = _mm256_add_pd(u, rot);
    __m256d ge = _mm256_cmp_pd(v, ones, _CMP_GE_OQ);
    return _mm256_sub_pd(v, _mm256_and_pd(ge, ones));
}

std::uint64_t triangle_hits_avx2(std::uint64_t seed, std::uint64_t first,
                                 std::uint64_t n, double r, double rot_turn) {
    const std::uint64_t base = seed_base(seed);
    const __m256i lane_off = _mm256_set_epi64x(9, 6, 3, 0);
    const __m256d zero = _mm256_setzero_pd();
    const __m256d rv = _mm256_set1_pd(r);
    const __m256d rot = _mm256_set1_pd(rot_turn);
    std::uint64_t hits = 0;
    std::uint64_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i c0 = _mm256_add_epi64(
            _mm256_set1_epi64x(std::int64_t((first + i) * triangle_draws)), lane_off);
        __m256i c1 = _mm256_add_epi64(c0, _mm256_set1_epi64x(1));
        __m256i c2 = _mm256_add_epi64(c0, _mm256_set1_epi64x(2));
        __m256d ua = add_turn_v(to_unit_v(draw_v(base, c0)), rot);
        __m256d ub = add_turn_v(to_unit_v(draw_v(base, c1)), rot);
        __m256d uc = add_turn_v(to_unit_v(draw_v(base, c2)), rot);
        SinCosV a = sincos_turn_v(ua);
        SinCosV b = sincos_turn_v(ub);
        SinCosV c = sincos_turn_v(uc);
        __m256d det = _mm256_add_pd(
            _mm256_add_pd(_mm256_mul_pd(a.c, _mm256_sub_pd(b.s, c.s)),
                          _mm256_mul_pd(b.c, _mm256_sub_pd(c.s, a.s))),
            _mm256_mul_pd(c.c, _mm256_sub_pd(a.s, b.s)));
        auto edge_cross = [&](const SinCosV& p, const SinCosV& q) {
            return _mm256_sub_pd(
                _mm256_mul_pd(_mm256_sub_pd(q.c, p.c), _mm256_sub_pd(zero, p.s)),
                _mm256_mul_pd(_mm256_sub_pd(q.s, p.s), _mm256_sub_pd(rv, p.c)));
        };
        __m256d e1 = edge_cross(a, b);
        __m256d e2 = edge_cross(b, c);
        __m256d e3 = edge_cross(c, a);
        __m256d mo = _mm256_cmp_pd(det, zero, _CMP_GT_OQ);
        __m256d bad = _mm256_or_pd(
            _mm256_xor_pd(_mm256_cmp_pd(e1, zero, _CMP_GT_OQ), mo),
            _mm256_or_pd(_mm256_xor_pd(_mm256_cmp_pd(e2, zero, _CMP_GT_OQ), mo),
                         _mm256_xor_pd(_mm256_cmp_pd(e3, zero, _CMP_GT_OQ), mo)));
        hits += std::uint64_t(__builtin_popcount(~_mm256_movemask_pd(bad) & 0xF));
    }
    for (; i < n; ++i) hits += impl::triangle_trial(base, first + i, r, rot_turn);
    return hits;
}

std::uint64_t chord_hits_avx2(std::uint64_t seed, std::uint64_t first,
                              std::uint64_t n, const double* radii,
                              std::size_t n_radii, std::uint64_t* hits) {
    const std::uint64_t base = seed_base(seed);
    const __m256i lane_off = _mm256_set_epi64x(12, 8, 4, 0);
    const __m256d zero = _mm256_setzero_pd();
    const __m256d ones = _mm256_set1_pd(1.0);
    auto fract = [&](__m256d x) {
        __m256d lt = _mm256_cmp_pd(x, zero, _CMP_LT_OQ);
        return _mm256_add_pd(x, _mm256_and_pd(lt, ones));
    };
    std::uint64_t accepted = 0;
    std::uint64_t j = 0;
    for (; j + 4 <= n; j += 4) {
        __m256i c0 = _mm256_add_epi64(
            _mm256_set1_epi64x(std::int64_t((first + j) * chord_draws)), lane_off);
        __m256d u1 = to_unit_v(draw_v(base, c0));
        __m256d u2 = to_unit_v(draw_v(base, _mm256_add_epi64(c0, _mm256_set1_epi64x(1))));
        __m256d u3 = to_unit_v(draw_v(base, _mm256_add_epi64(c0, _mm256_set1_epi64x(2))));
        __m256d u4 = to_unit_v(draw_v(base, _mm256_add_epi64(c0, _mm256_set1_epi64x(3))));
        __m256d da = fract(_mm256_sub_pd(u2, u1));
        __m256d db1 = fract(_mm256_sub_pd(u3, u1));
        __m256d db2 = fract(_mm256_sub_pd(u4, u1));
        __m256d acc = _mm256_xor_pd(_mm256_cmp_pd(db1, da, _CMP_LT_OQ),
                                    _mm256_cmp_pd(db2, da, _CMP_LT_OQ));
        int acc_bits = _mm256_movemask_pd(acc);
        accepted += std::uint64_t(__builtin_popcount(acc_bits & 0xF));
        if (!acc_bits) continue;
        SinCosV p1 = sincos_turn_v(u1);
        SinCosV p2 = sincos_turn_v(u2);
        SinCosV q1 = sincos_turn_v(u3);
        SinCosV q2 = sincos_turn_v(u4);
        __m256d d1x = _mm256_sub_pd(p2.c, p1.c), d1y = _mm256_sub_pd(p2.s, p1.s);
        __m256d d2x = _mm256_sub_pd(q2.c, q1.c), d2y = _mm256_sub_pd(q2.s, q1.s);
        __m256d denom = _mm256_sub_pd(_mm256_mul_pd(d1x, d2y), _mm256_mul_pd(d1y, d2x));
        __m256d wx = _mm256_sub_pd(q1.c, p1.c), wy = _mm256_sub_pd(q1.s, p1.s);
        __m256d t = _mm256_div_pd(
            _mm256_sub_pd(_mm256_mul_pd(wx, d2y), _mm256_mul_pd(wy, d2x)), denom);
        __m256d ix = _mm256_add_pd(p1.c, _mm256_mul_pd(t, d1x));
        __m256d iy = _mm256_add_pd(p1.s, _mm256_mul_pd(t, d1y));
        __m256d dist2 = _mm256_add_pd(_mm256_mul_pd(ix, ix), _mm256_mul_pd(iy, iy));
        for (std::size_t k = 0; k < n_radii; ++k) {
            __m256d hit;
            if (radii[k] >= 1.0) {
                hit = acc;
            } else {
                __m256d r2 = _mm256_set1_pd(radii[k] * radii[k]);
                hit = _mm256_and_pd(acc, _mm256_cmp_pd(dist2, r2, _CMP_LE_OQ));
            }
            hits[k] += std::uint64_t(__builtin_popcount(_mm256_movemask_pd(hit) & 0xF));
        }
    }
    for (; j < n; ++j) {
        impl::ChordAttempt at = impl::chord_attempt(base, first + j);
        accepted += at.accepted;
        impl::accumulate_chord_hits(at, radii, n_radii, hits);
    }
    return accepted;
}

ThreeCircleHits three_circle_hits_avx2(std::uint64_t seed, std::uint64_t first,
                                       std::uint64_t n) {
    const std::uint64_t base = seed_base(seed);
    const __m256i lane_off = _mm256_set_epi64x(12, 8, 4, 0);
    const __m256d half = _mm256_set1_pd(0.5);
    ThreeCircleHits counts;
    std::uint64_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i c0 = _mm256_add_epi64(
            _mm256_set1_epi64x(std::int64_t((first + i) * three_circle_draws)), lane_off);
        __m256d ua = to_unit_v(draw_v(base, c0));
        __m256d ub = to_unit_v(draw_v(base, _mm256_add_epi64(c0, _mm256_set1_epi64x(1))));
        __m256d uc = to_unit_v(draw_v(base, _mm256_add_epi64(c0, _mm256_set1_epi64x(2))));
        __m256d eq = _mm256_cmp_pd(uc, ub, _CMP_EQ_OQ);
        if (_mm256_movemask_pd(eq)) {
            __m256d spare =
                to_unit_v(draw_v(base, _mm256_add_epi64(c0, _mm256_set1_epi64x(3))));
            uc = _mm256_blendv_pd(uc, spare, eq);
            eq = _mm256_cmp_pd(uc, ub, _CMP_EQ_OQ);
            uc = _mm256_blendv_pd(uc, add_turn_v(uc, half), eq);
        }
        SinCosV a = sincos_turn_v(ua);
        SinCosV b = sincos_turn_v(ub);
        SinCosV c = sincos_turn_v(uc);
        __m256d ax = _mm256_add_pd(_mm256_set1_pd(-2.0), a.c);
        auto meets = [&](__m256d px, __m256d py, __m256d qx, __m256d qy) {
            __m256d ux = _mm256_sub_pd(qx, px), uy = _mm256_sub_pd(qy, py);
            __m256d vx = _mm256_sub_pd(_mm256_set1_pd(2.0), px);
            __m256d vy = _mm256_sub_pd(_mm256_setzero_pd(), py);
            __m256d cr = _mm256_sub_pd(_mm256_mul_pd(ux, vy), _mm256_mul_pd(uy, vx));
            __m256d rhs = _mm256_add_pd(_mm256_mul_pd(ux, ux), _mm256_mul_pd(uy, uy));
            return _mm256_cmp_pd(_mm256_mul_pd(cr, cr), rhs, _CMP_LE_OQ);
        };
        __m256d ab = meets(ax, a.s, b.c, b.s);
        __m256d bc = meets(b.c, b.s, c.c, c.s);
        counts.ab += std::uint64_t(__builtin_popcount(_mm256_movemask_pd(ab) & 0xF));
        counts.bc += std::uint64_t(__builtin_popcount(_mm256_movemask_pd(bc) & 0xF));
    }
    for (; i < n; ++i) {
        bool ab = false, bc = false;
        impl::three_circle_trial(base, first + i, ab, bc);
        counts.ab += ab;
        counts.bc += bc;
    }
    return counts;
}

void sincos_batch_avx2(const double* u, double* c, double* s, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        SinCosV cs = sincos_turn_v(_mm256_loadu_pd(u + i));
        _mm256_storeu_pd(c + i, cs.c);
        _mm256_storeu_pd(s + i, cs.s);
    }
    for (; i < n; ++i) {
        SinCos cs = sincos_turn(u[i]);
        c[i] = cs.c;
        s[i] = cs.s;
    }
}

}  // namespace

const KernelSet* avx2_kernels() {
    static const KernelSet set{
        "avx2",
        triangle_hits_avx2,
        chord_hits_avx2,
        three_circle_hits_avx2,
        sincos_batch_avx2,
    };
    static const bool supported =
        __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return supported ? &set : nullptr;
}

}  // namespace geomprob::kernels

#else  // non-x86 targets fall back to the scalar kernels

namespace geomprob::kernels {
const KernelSet* avx2_kernels() { return nullptr; }
}  // namespace geomprob::kernels

#endif
