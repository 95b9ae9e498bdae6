#ifndef TORIC_PARALLEL_HPP
#define TORIC_PARALLEL_HPP

#include <cstdlib>
#include <thread>
#include <vector>

namespace toric {

/// Worker count for embarrassingly parallel scans, capped by the
/// TORIC_CCC_THREADS environment variable.
inline int thread_budget() {
    unsigned hw = std::thread::hardware_concurrency();
    int budget = hw ? static_cast<int>(hw) : 1;
    if (const char* env = std::getenv("TORIC_CCC_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1 && cap < budget) budget = cap;
    }
    return budget;
}

/**
 * Run body(i) for i in [0, count). The body must only write to slots owned
 * by its index, so results are bit-identical regardless of the schedule.
 */
template <typename F>
void parallel_for(size_t count, F&& body) {
    const int workers = thread_budget();
    if (workers <= 1 || count < 64) {
        for (size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    const size_t stride = static_cast<size_t>(workers);
    for (size_t w = 0; w < stride; ++w) {
        pool.emplace_back([&, w] {
            for (size_t i = w; i < count; i += stride) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace toric

#endif
