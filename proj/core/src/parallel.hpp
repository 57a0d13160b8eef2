#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "chunkph/boundary_matrix.hpp"

namespace chunkph::detail {

// Runs fn(task, worker) for every task in [0, count) on up to `workers`
// threads and joins them (the join is the phase barrier the chunk algorithm
// relies on). A failure in any worker aborts the run and rethrows in the
// caller.
template <class F>
void parallel_tasks(index_t count, unsigned workers, F&& fn) {
    if (count <= 0) return;
    if (workers <= 1 || count == 1) {
        for (index_t i = 0; i < count; ++i) fn(i, 0u);
        return;
    }
    const unsigned spawn = static_cast<unsigned>(
        std::min<index_t>(count, static_cast<index_t>(workers)));
    std::atomic<index_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(spawn);
    for (unsigned w = 0; w < spawn; ++w) {
        pool.emplace_back([&, w] {
            for (;;) {
                if (failed.load(std::memory_order_relaxed)) return;
                const index_t i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= count) return;
                try {
                    fn(i, w);
                } catch (...) {
                    {
                        std::lock_guard<std::mutex> lock(error_mutex);
                        if (!error) error = std::current_exception();
                    }
                    failed.store(true, std::memory_order_relaxed);
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace chunkph::detail
