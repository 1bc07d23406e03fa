#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sic {

/// Runs fn(i) for i in [0, count) on up to n_jobs threads.
/// Work items must not share mutable state; the first exception is rethrown.
template <class Fn>
void parallel_for(std::size_t count, int n_jobs, Fn&& fn) {
    if (count == 0) return;
    if (n_jobs < 1) n_jobs = 1;
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(n_jobs), count);
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace sic
