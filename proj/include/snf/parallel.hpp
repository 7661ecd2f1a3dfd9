#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace snf {

/// Calls body(i) for every i in [0, count) on up to `threads` workers.
/// Indices are handed out in small chunks; body must only write state owned
/// by index i. The first exception thrown by any worker is rethrown here.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body && body, std::size_t chunk = 64)
{
    threads = std::max(1U, threads);
    if (threads == 1 || count <= chunk) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        try {
            for (;;) {
                const std::size_t begin = next.fetch_add(chunk);
                if (begin >= count)
                    return;
                const std::size_t end = std::min(count, begin + chunk);
                for (std::size_t i = begin; i < end; ++i)
                    body(i);
            }
        }
        catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error)
                error = std::current_exception();
            next.store(count);
        }
    };

    std::vector<std::jthread> pool;
    const auto n = static_cast<unsigned>(std::min<std::size_t>(threads, (count + chunk - 1) / chunk));
    pool.reserve(n - 1);
    for (unsigned t = 1; t < n; ++t)
        pool.emplace_back(worker);
    worker();
    pool.clear();
    if (error)
        std::rethrow_exception(error);
}

} // namespace snf
