#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace tfsax {

/// Runs fn(begin, end) over [0, count) split into contiguous chunks, one per
/// worker thread. Chunk boundaries depend only on (count, workers); callers
/// that write results into per-index slots therefore produce identical output
/// for any worker count. The first exception thrown by a worker is rethrown.
inline void parallel_for(std::size_t count, unsigned workers,
                         const std::function<void(std::size_t, std::size_t)>& fn) {
    if (count == 0) {
        return;
    }
    if (workers <= 1 || count == 1) {
        fn(0, count);
        return;
    }
    const std::size_t n_threads = std::min<std::size_t>(workers, count);
    const std::size_t base = count / n_threads;
    const std::size_t extra = count % n_threads;

    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(n_threads);
    pool.reserve(n_threads);
    std::size_t begin = 0;
    for (std::size_t t = 0; t < n_threads; ++t) {
        const std::size_t end = begin + base + (t < extra ? 1 : 0);
        pool.emplace_back([&fn, &errors, t, begin, end] {
            try {
                fn(begin, end);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
        begin = end;
    }
    for (auto& th : pool) {
        th.join();
    }
    for (const auto& err : errors) {
        if (err) {
            std::rethrow_exception(err);
        }
    }
}

} // namespace tfsax
