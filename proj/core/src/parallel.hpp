// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace adelic::detail {

inline std::size_t thread_count() {
    if (const char *env = std::getenv("ADELIC_THREADS")) {
        long n = std::strtol(env, nullptr, 10);
        if (n >= 1)
            return static_cast<std::size_t>(n);
    }
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

/// Runs fn(k) for k in [0, n) on a small pool; results must be written by
/// index, so output order does not depend on scheduling. Rethrows the first
/// exception by index.
template <class Fn> void parallel_for(std::size_t n, Fn fn) {
    std::size_t workers = std::min(thread_count(), n);
    std::vector<std::exception_ptr> errors(n);
    if (workers <= 1) {
        for (std::size_t k = 0; k < n; ++k) {
            try {
                fn(k);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t k; (k = next.fetch_add(1)) < n;) {
                    try {
                        fn(k);
                    } catch (...) {
                        errors[k] = std::current_exception();
                    }
                }
            });
        for (auto &t : pool)
            t.join();
    }
    for (auto &e : errors)
        if (e)
            std::rethrow_exception(e);
}

} // namespace adelic::detail
