#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace eisenzeta {

// Worker count: explicit request, else EISENZETA_WORKERS, else hardware.
inline int default_workers() {
    if (const char* env = std::getenv("EISENZETA_WORKERS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

// Runs fn(i) for i in [0, n) on up to `workers` threads. Results must be
// written to pre-sized slots indexed by i so ordering stays deterministic.
inline void parallel_for(long long n, int workers, const std::function<void(long long)>& fn) {
    if (n <= 0) return;
    workers = static_cast<int>(std::max<long long>(1, std::min<long long>(workers, n)));
    if (workers == 1) {
        for (long long i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    std::atomic<long long> next{0};
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const long long i = next.fetch_add(1);
                if (i >= n) return;
                fn(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace eisenzeta
