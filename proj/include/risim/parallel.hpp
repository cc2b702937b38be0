#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <span>
#include <vector>

namespace risim::parallel {

/// Worker count: RIS_IM_THREADS when set (>= 1), else the hardware concurrency.
std::size_t worker_count();

/// Runs task(i) for i in [first, last) over the worker pool. The assignment of
/// indices to threads is irrelevant to callers that write into slot i only.
void for_range(std::size_t first, std::size_t last, const std::function<void(std::size_t)>& task);

/// Deterministic pairwise (tree) summation.
double pairwise_sum(std::span<const double> values);

/// Evaluates blocks 0, 1, 2, ... in parallel waves and keeps the prefix up to and
/// including the first block at which done(prefix) holds, or max_blocks. The
/// kept prefix depends only on the block results, never on the worker count.
template <class Result>
std::vector<Result> run_blocks_until(std::size_t max_blocks,
                                     const std::function<Result(std::size_t)>& block,
                                     const std::function<bool(const std::vector<Result>&)>& done) {
    std::vector<Result> kept;
    const std::size_t wave = worker_count();
    std::size_t next = 0;
    while (next < max_blocks) {
        const std::size_t end = std::min(max_blocks, next + wave);
        std::vector<Result> batch(end - next);
        for_range(next, end, [&](std::size_t i) { batch[i - next] = block(i); });
        for (auto& r : batch) {
            kept.push_back(std::move(r));
            if (done(kept)) return kept;
        }
        next = end;
    }
    return kept;
}

}  // namespace risim::parallel
