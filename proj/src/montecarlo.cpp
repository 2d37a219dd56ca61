// SPDX-License-Identifier: Apache-2.0
#include "geomprob/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "geomprob/kernels.hpp"

namespace geomprob {

namespace {

unsigned resolve_workers(unsigned workers) {
    if (workers != 0) return workers;
    unsigned hw = std::thread::hardware_concurrency();
    return hw != 0 ? hw : 1;
}

double bernoulli_std_err(double p, std::uint64_t n) {
    return std::sqrt(p * (1.0 - p) / double(n));
}

// Splits [first, first + n) into one contiguous chunk per worker and runs
// fn(worker_index, chunk_first, chunk_n) on each; chunk results must be
// combined by commutative integer sums for worker-count independence.
template <class Fn>
void run_chunked(std::uint64_t first, std::uint64_t n, unsigned workers, Fn&& fn) {
    std::uint64_t w = std::min<std::uint64_t>(workers, n);
    if (w <= 1) {
        fn(0u, first, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(w);
    std::uint64_t chunk = n / w, rem = n % w;
    std::uint64_t start = first;
    for (unsigned i = 0; i < w; ++i) {
        std::uint64_t len = chunk + (i < rem ? 1 : 0);
        pool.emplace_back([&fn, i, start, len] { fn(i, start, len); });
        start += len;
    }
    for (auto& t : pool) t.join();
}

McEstimate run_triangle(const char* name, double r, double rot_turn,
                        std::uint64_t trials, std::uint64_t seed,
                        unsigned workers) {
    if (trials == 0) throw std::invalid_argument("trials must be >= 1");
    const auto& kernel = kernels::active_kernels();
    unsigned w = resolve_workers(workers);
    std::vector<std::uint64_t> counts(std::min<std::uint64_t>(w, trials), 0);
    run_chunked(0, trials, w, [&](unsigned i, std::uint64_t first, std::uint64_t n) {
        counts[i] = kernel.triangle_hits(seed, first, n, r, rot_turn);
    });
    std::uint64_t hits = 0;
    for (std::uint64_t c : counts) hits += c;
    double p = double(hits) / double(trials);
    return {name, p, trials, bernoulli_std_err(p, trials), seed};
}

}  // namespace

McEstimate simulate_triangle(InteriorPoint x, std::uint64_t trials,
                             std::uint64_t seed, unsigned workers) {
    return run_triangle("triangle", x.r, 0.0, trials, seed, workers);
}

McEstimate simulate_triangle_rotated(InteriorPoint x, double rotation,
                                     std::uint64_t trials, std::uint64_t seed,
                                     unsigned workers) {
    double rot_turn = rotation / two_pi;
    rot_turn -= std::floor(rot_turn);
    if (rot_turn >= 1.0) rot_turn = 0.0;
    return run_triangle("triangle", x.r, rot_turn, trials, seed, workers);
}

ChordSimResult simulate_chords(const std::vector<double>& r_grid,
                               std::uint64_t trials, std::uint64_t seed,
                               unsigned workers) {
    if (trials == 0) throw std::invalid_argument("trials must be >= 1");
    for (double r : r_grid)
        if (!(r >= 0.0 && r <= 1.0))
            throw std::domain_error("chord radius must lie in [0, 1]");
    const auto& kernel = kernels::active_kernels();
    const unsigned w = resolve_workers(workers);
    const std::size_t nr = r_grid.size();

    // Attempts are consumed in fixed-size blocks; a block is merged only if
    // it does not reach the requested acceptance count, otherwise it is
    // replayed attempt by attempt so that exactly the first `trials`
    // acceptances (in counter order) contribute, whatever the worker count.
    constexpr std::uint64_t block = std::uint64_t{1} << 18;
    std::uint64_t accepted = 0, attempts = 0;
    std::vector<std::uint64_t> hits(nr, 0);
    while (true) {
        std::vector<std::uint64_t> acc_w(w, 0);
        std::vector<std::vector<std::uint64_t>> hits_w(w, std::vector<std::uint64_t>(nr, 0));
        run_chunked(attempts, block, w,
                    [&](unsigned i, std::uint64_t first, std::uint64_t n) {
                        acc_w[i] = kernel.chord_hits(seed, first, n, r_grid.data(),
                                                     nr, hits_w[i].data());
                    });
        std::uint64_t block_acc = 0;
        for (std::uint64_t a : acc_w) block_acc += a;
        if (accepted + block_acc < trials) {
            accepted += block_acc;
            for (unsigned i = 0; i < w; ++i)
                for (std::size_t k = 0; k < nr; ++k) hits[k] += hits_w[i][k];
            attempts += block;
            continue;
        }
        for (std::uint64_t j = attempts;; ++j) {
            std::uint64_t one =
                kernel.chord_hits(seed, j, 1, r_grid.data(), nr, hits.data());
            if (one) {
                ++accepted;
                if (accepted == trials) {
                    attempts = j + 1;
                    break;
                }
            }
        }
        break;
    }

    ChordSimResult result;
    result.attempts = attempts;
    for (std::size_t k = 0; k < nr; ++k) {
        double p = double(hits[k]) / double(trials);
        result.estimates.push_back(
            {"chords", p, trials, bernoulli_std_err(p, trials), seed});
    }
    double rate = double(trials) / double(attempts);
    result.acceptance = {"chords_acceptance", rate, attempts,
                         bernoulli_std_err(rate, attempts), seed};
    return result;
}

ThreeCircleResult simulate_three_circles(std::uint64_t trials,
                                         std::uint64_t seed, unsigned workers) {
    if (trials == 0) throw std::invalid_argument("trials must be >= 1");
    const auto& kernel = kernels::active_kernels();
    unsigned w = resolve_workers(workers);
    std::vector<kernels::ThreeCircleHits> counts(std::min<std::uint64_t>(w, trials));
    run_chunked(0, trials, w, [&](unsigned i, std::uint64_t first, std::uint64_t n) {
        counts[i] = kernel.three_circle_hits(seed, first, n);
    });
    std::uint64_t ab = 0, bc = 0;
    for (const auto& c : counts) {
        ab += c.ab;
        bc += c.bc;
    }
    double pab = double(ab) / double(trials);
    double pbc = double(bc) / double(trials);
    return {{"three-circles-ab", pab, trials, bernoulli_std_err(pab, trials), seed},
            {"three-circles-bc", pbc, trials, bernoulli_std_err(pbc, trials), seed}};
}

}  // namespace geomprob
