#pragma once

#include <cstdint>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

namespace deckrec {

inline int default_workers() {
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

/// Split [0, total) into `workers` contiguous chunks and run
/// fn(worker_index, begin, end) on each. The partition depends only on
/// (total, workers), never on scheduling, so callers that merge per-worker
/// results in worker order get identical output on any machine. Results for
/// a given input must not depend on the worker count either; callers
/// achieve that by making per-chunk results order-insensitive (sums, maxes)
/// or by merging chunks in index order.
template <typename Fn>
void for_each_range(std::uint64_t total, int workers, Fn&& fn) {
    if (workers < 1) workers = 1;
    if (static_cast<std::uint64_t>(workers) > total && total > 0)
        workers = static_cast<int>(total);
    if (total == 0) return;
    if (workers == 1) {
        fn(0, std::uint64_t(0), total);
        return;
    }
    const std::uint64_t chunk = total / workers;
    const std::uint64_t extra = total % workers;
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    threads.reserve(static_cast<std::size_t>(workers));
    std::uint64_t begin = 0;
    for (int w = 0; w < workers; ++w) {
        const std::uint64_t len = chunk + (static_cast<std::uint64_t>(w) < extra ? 1 : 0);
        const std::uint64_t end = begin + len;
        threads.emplace_back([&, w, begin, end] {
            try {
                fn(w, begin, end);
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
        begin = end;
    }
    for (auto& th : threads) th.join();
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);
}

}  // namespace deckrec
