#ifndef E8CAS_PARALLEL_HPP
#define E8CAS_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace e8cas {

/// Process-wide worker count for the pure-computation pools (1 = serial).
void set_thread_count(unsigned n);
unsigned thread_count();

/// Runs fn(i) for i in [0, n). Work is handed out dynamically but results
/// must be written to per-index slots by the caller, so the outcome is
/// identical for every thread count.
inline void parallel_for(size_t n, const std::function<void(size_t)>& fn) {
    unsigned workers = thread_count();
    if (workers <= 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    if (workers > n) workers = static_cast<unsigned>(n);
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

} // namespace e8cas

#endif
