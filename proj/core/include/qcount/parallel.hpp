#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qcount {

/// Resolves a requested worker count; 0 means one per hardware thread.
inline unsigned resolve_workers(unsigned requested) noexcept
{
    if (requested != 0)
        return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls fn(i) for i in [0, count) on a pool of workers. Each index is visited
/// exactly once; fn must only write to state owned by index i. The first
/// exception thrown by any call is rethrown after all workers join.
template <class Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn)
{
    workers = static_cast<unsigned>(std::min<std::size_t>(resolve_workers(workers), count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) {
                    try {
                        fn(i);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure)
                            failure = std::current_exception();
                        next = count;
                    }
                }
            });
        }
    }
    if (failure)
        std::rethrow_exception(failure);
}

}  // namespace qcount
