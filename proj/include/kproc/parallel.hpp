#pragma once

#include <atomic>
#include <cstdlib>
#include <cstddef>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace kproc {

inline std::size_t default_workers() {
    if (const char* env = std::getenv("FUSIONPROC_WORKERS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<std::size_t>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

// Run fn(0..count-1) over a bounded worker pool. Tasks must not share
// mutable state; callers collect results by task index.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn,
                         std::size_t workers = 0) {
    if (workers == 0) workers = default_workers();
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers && w < count; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) break;
                fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace kproc
