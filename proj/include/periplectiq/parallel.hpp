#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace periplectiq {

/// Worker-pool width: PERIPLECTIQ_THREADS when set, else the hardware count
/// (capped at 8); never below 1.
inline unsigned thread_budget() {
    if (const char* env = std::getenv("PERIPLECTIQ_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
        return 1;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : std::min(hw, 8u);
}

/// Runs f(i) for i in [0, count) on the worker pool; results must be written
/// to pre-sized slots so that assembly stays deterministic.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& f) {
    const unsigned workers = std::min<std::size_t>(thread_budget(), count ? count : 1);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) f(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace periplectiq
