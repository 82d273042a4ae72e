#pragma once

// Minimal deterministic work splitting: a range is cut into many small
// chunks, workers claim chunks through an atomic counter, and partial
// results are merged in chunk order. Merges used in this project are
// associative, so the final value does not depend on the thread count or
// on which worker ran which chunk.

#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace preserver {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

template <typename Result, typename ChunkFn, typename MergeFn>
Result parallel_reduce(uint64_t begin, uint64_t end, int threads, Result init, ChunkFn chunk_fn,
                       MergeFn merge) {
    const uint64_t total = end > begin ? end - begin : 0;
    const int workers = static_cast<int>(
        std::min<uint64_t>(std::max(resolve_threads(threads), 1), std::max<uint64_t>(total, 1)));
    if (workers <= 1 || total == 0) {
        Result r = init;
        merge(r, chunk_fn(begin, end));
        return r;
    }
    // Small chunks keep skewed workloads balanced.
    const uint64_t chunk_count = std::min<uint64_t>(total, static_cast<uint64_t>(workers) * 64);
    const uint64_t step = total / chunk_count;
    const uint64_t extra = total % chunk_count;
    auto chunk_bounds = [&](uint64_t k) {
        const uint64_t lo = begin + k * step + std::min(k, extra);
        return std::pair<uint64_t, uint64_t>{lo, lo + step + (k < extra ? 1 : 0)};
    };

    std::vector<Result> partials(chunk_count, init);
    std::vector<std::exception_ptr> errors(chunk_count);
    std::atomic<uint64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            while (true) {
                const uint64_t k = next.fetch_add(1);
                if (k >= chunk_count) return;
                const auto [lo, hi] = chunk_bounds(k);
                try {
                    partials[k] = chunk_fn(lo, hi);
                } catch (...) {
                    errors[k] = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    Result r = init;
    for (auto& p : partials) merge(r, p);
    return r;
}

}  // namespace preserver
