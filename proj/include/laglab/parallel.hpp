#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace laglab {

// Runs body(i) for i in [0, n) across hardware threads. Each index is
// processed exactly once; callers own any output slot i, so results are
// deterministic regardless of scheduling.
template <typename Body>
void parallel_for(std::size_t n, const Body& body) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw < 2 || n < 4) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            body(i);
        }
    };
    std::vector<std::thread> pool;
    unsigned nthreads = std::min<std::size_t>(hw, n);
    pool.reserve(nthreads - 1);
    for (unsigned k = 1; k < nthreads; ++k) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

}  // namespace laglab
