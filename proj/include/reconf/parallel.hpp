#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace reconf {

/// Runs fn(i) for every i in [0, count) on a small worker pool (defaults to
/// the hardware thread count). Work items must be independent; callers keep
/// determinism by writing results into slot i rather than by arrival order.
/// The first exception thrown by any item is rethrown after all workers
/// stop picking up new work.
inline void parallel_for_indexed(std::size_t count,
                                 const std::function<void(std::size_t)>& fn,
                                 unsigned workers = 0) {
    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(count);  // drain remaining work
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    const unsigned spawned =
        static_cast<unsigned>(std::min<std::size_t>(workers, count));
    pool.reserve(spawned);
    for (unsigned w = 0; w < spawned; ++w) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace reconf
