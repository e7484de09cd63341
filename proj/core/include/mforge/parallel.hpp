#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace mforge {

/// Runs fn(i) for every i in [0, count) using up to `jobs` worker threads.
/// Callers keep determinism by writing results into per-index slots only.
inline void parallel_for(std::int64_t count, int jobs, const std::function<void(std::int64_t)>& fn) {
    if (count <= 0) return;
    if (jobs <= 1 || count == 1) {
        for (std::int64_t i = 0; i < count; ++i) fn(i);
        return;
    }
    int workers = static_cast<int>(std::min<std::int64_t>(jobs, count));
    std::atomic<std::int64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::int64_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace mforge
