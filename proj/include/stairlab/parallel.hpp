#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace stairlab {

/// Worker count: STAIRCASE_LAB_THREADS when set, else hardware concurrency.
inline unsigned worker_count() {
    if (const char* env = std::getenv("STAIRCASE_LAB_THREADS")) {
        long v = std::atol(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

/// Runs fn(i) for i in [0, count) across workers; results must be written to
/// pre-sized slots so the output order stays deterministic.
inline void parallel_for(size_t count, const std::function<void(size_t)>& fn) {
    unsigned workers = worker_count();
    if (workers <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> threads;
    std::atomic<size_t> next{0};
    for (unsigned w = 0; w < workers && w < count; ++w) {
        threads.emplace_back([&] {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= count) break;
                fn(i);
            }
        });
    }
    for (auto& t : threads) t.join();
}

} // namespace stairlab
