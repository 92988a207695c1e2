#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace twosat {

inline int hardware_jobs() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Splits [0, total) into contiguous chunks, runs fn(begin, end) on each in
/// its own thread, and returns the per-chunk results in index order. With
/// jobs <= 1 runs inline.
template <class Fn>
auto parallel_map_ranges(uint64_t total, int jobs, Fn&& fn)
    -> std::vector<decltype(fn(uint64_t{}, uint64_t{}))> {
    using Result = decltype(fn(uint64_t{}, uint64_t{}));
    if (jobs < 1) jobs = 1;
    if (static_cast<uint64_t>(jobs) > total && total > 0) jobs = static_cast<int>(total);
    if (jobs <= 1) return {fn(uint64_t{0}, total)};

    std::vector<Result> results(jobs);
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (int j = 0; j < jobs; ++j) {
        const uint64_t begin = total / jobs * j + std::min<uint64_t>(j, total % jobs);
        const uint64_t end = total / jobs * (j + 1) + std::min<uint64_t>(j + 1, total % jobs);
        threads.emplace_back([&, j, begin, end] {
            try {
                results[j] = fn(begin, end);
            } catch (...) {
                errors[j] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

/// Runs fn(i) for i in [0, count) across up to `jobs` worker threads.
/// Results must be written by fn into caller-owned, index-disjoint storage.
template <class Fn>
void parallel_for_index(size_t count, int jobs, Fn&& fn) {
    parallel_map_ranges(count, jobs, [&](uint64_t begin, uint64_t end) {
        for (uint64_t i = begin; i < end; ++i) fn(static_cast<size_t>(i));
        return 0;
    });
}

}  // namespace twosat
