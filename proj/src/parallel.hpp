#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace colexent::detail {

// Runs body(i) for i in [0, count) on the requested number of threads
// (0 = hardware concurrency). Work items are claimed via an atomic counter;
// callers keep determinism by writing results into per-index slots.
template <typename Body>
void parallel_for_index(long long count, int threads, Body&& body) {
    if (count <= 0) return;
    long long width = threads == 0
                          ? static_cast<long long>(std::max(1u, std::thread::hardware_concurrency()))
                          : threads;
    width = std::min(width, count);
    if (width <= 1) {
        for (long long i = 0; i < count; ++i) body(i);
        return;
    }

    std::atomic<long long> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(width));
    for (long long w = 0; w < width; ++w) {
        pool.emplace_back([&] {
            while (!failed.load(std::memory_order_relaxed)) {
                const long long i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= count) break;
                try {
                    body(i);
                } catch (...) {
                    const std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    failed.store(true, std::memory_order_relaxed);
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace colexent::detail
