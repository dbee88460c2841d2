#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace quon {

// Worker count for embarrassingly parallel sweeps; overridable through the
// QUON_WORKERS environment variable. Results never depend on it because every
// work item writes to its own slot.
inline unsigned worker_count() {
    if (const char* env = std::getenv("QUON_WORKERS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 4096) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Runs fn(i) for every i in [0, count), possibly concurrently. The first
// exception thrown by any item is rethrown to the caller after all workers
// finish.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    const unsigned workers = worker_count();
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> cursor{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto body = [&]() {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= count || failed.load()) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const unsigned launch = static_cast<unsigned>(std::min<std::size_t>(workers, count));
    pool.reserve(launch);
    for (unsigned t = 0; t < launch; ++t) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace quon
