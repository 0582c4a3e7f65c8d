#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace subframe {

inline unsigned default_jobs() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1u : n;
}

// Splits [0,n) into contiguous chunks, one worker thread per chunk.
// fn(begin, end) must not throw.
inline void parallel_for(std::size_t n, unsigned jobs,
                         const std::function<void(std::size_t, std::size_t)>& fn) {
    if (n == 0) return;
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
    if (jobs == 1) {
        fn(0, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    const std::size_t chunk = (n + jobs - 1) / jobs;
    for (unsigned t = 0; t < jobs; ++t) {
        const std::size_t b = static_cast<std::size_t>(t) * chunk;
        const std::size_t e = std::min(n, b + chunk);
        if (b >= e) break;
        pool.emplace_back(fn, b, e);
    }
    for (auto& th : pool) th.join();
}

// Deterministic parallel reduction: fixed block size, per-block partial sums
// combined in index order regardless of thread count.
inline double parallel_sum_blocks(std::size_t n, unsigned jobs,
                                  const std::function<double(std::size_t, std::size_t)>& block_sum) {
    constexpr std::size_t kBlock = 4096;
    const std::size_t nblocks = (n + kBlock - 1) / kBlock;
    std::vector<double> partial(nblocks, 0.0);
    parallel_for(nblocks, jobs, [&](std::size_t b0, std::size_t b1) {
        for (std::size_t b = b0; b < b1; ++b) {
            const std::size_t lo = b * kBlock;
            const std::size_t hi = std::min(n, lo + kBlock);
            partial[b] = block_sum(lo, hi);
        }
    });
    double acc = 0.0;
    for (double v : partial) acc += v;
    return acc;
}

}  // namespace subframe
