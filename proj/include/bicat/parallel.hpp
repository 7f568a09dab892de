#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace bicat {

struct SearchOptions {
    unsigned jobs = 1;
    // Skip associator/unitor arithmetic on instances flagged strict.
    bool strict_fast_path = false;
};

// Evaluates fn(0..n-1) and returns the results in index order, so callers that
// reduce to the first index that matters get single-threaded answers.
template <class R, class Fn>
std::vector<R> parallel_map(std::size_t n, unsigned jobs, Fn&& fn) {
    std::vector<R> out(n);
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    {
        std::vector<std::jthread> pool;
        unsigned k = std::min<std::size_t>(jobs, n);
        for (unsigned t = 0; t < k; ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < n; i = next++) {
                    try {
                        out[i] = fn(i);
                    } catch (...) {
                        std::lock_guard lk(err_mu);
                        if (!err) err = std::current_exception();
                    }
                }
            });
    }
    if (err) std::rethrow_exception(err);
    return out;
}

}  // namespace bicat
