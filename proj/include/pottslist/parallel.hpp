#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace pottslist {

/// Worker count: POTTSLIST_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t thread_budget();

/// Evaluates chunk(i) for i in [0, count) and returns the results in chunk order.
/// Chunks may run concurrently; the output never depends on the thread count.
template <class Result, class ChunkFn>
std::vector<Result> map_chunks(std::size_t count, ChunkFn chunk, std::size_t min_parallel_chunks = 2) {
    std::vector<Result> results(count);
    std::size_t workers = std::min(thread_budget(), count);
    if (workers <= 1 || count < min_parallel_chunks) {
        for (std::size_t i = 0; i < count; ++i) results[i] = chunk(i);
        return results;
    }
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += workers) results[i] = chunk(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return results;
}

}  // namespace pottslist
