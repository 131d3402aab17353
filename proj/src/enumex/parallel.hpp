#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ordpat::detail {

inline int resolve_jobs(int jobs)
{
    if (jobs > 0)
        return jobs;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs f(i) for i in [0, count) on up to `jobs` threads. The first exception is rethrown.
template <typename F>
void parallel_for(std::size_t count, int jobs, F && f)
{
    int workers = static_cast<int>(std::min<std::size_t>(count, static_cast<std::size_t>(resolve_jobs(jobs))));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto body = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            try {
                f(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (! error)
                    error = std::current_exception();
                next.store(count);
            }
        }
    };
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back(body);
    pool.clear();
    if (error)
        std::rethrow_exception(error);
}

/// Raises `target` to at least `value`.
inline void atomic_max(std::atomic<int> & target, int value)
{
    int cur = target.load();
    while (cur < value && ! target.compare_exchange_weak(cur, value)) {
    }
}

} // namespace ordpat::detail
