#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace sclat {

/// --jobs value, else SCLAT_JOBS, else 1.
inline unsigned resolve_jobs(unsigned requested = 0) {
    if (requested) return requested;
    if (const char* env = std::getenv("SCLAT_JOBS")) {
        try {
            int v = std::stoi(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (...) {
        }
    }
    return 1;
}

/// Runs f(i) for i in [0, count) on up to `jobs` threads. f must only write
/// to state owned by index i; callers reduce the slots in index order.
/// The first exception is rethrown after all workers stop.
template <class F>
void parallel_for(std::size_t count, unsigned jobs, F&& f) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex mu;
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
            try {
                f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!err) err = std::current_exception();
                next = count;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs && t < count; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace sclat
