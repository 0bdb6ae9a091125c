#include "mgs/util.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace mgs {

namespace {
std::atomic<int> g_thread_override{0};
}

void set_thread_count(int n) { g_thread_override.store(n); }

int thread_count() {
    int n = g_thread_override.load();
    if (n > 0) return n;
    if (const char* env = std::getenv("MGSPECTRAL_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? int(hw) : 1;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    int workers = thread_count();
    if (workers <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    if (std::size_t(workers) > n) workers = int(n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        std::size_t lo = n * w / workers;
        std::size_t hi = n * (w + 1) / workers;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace mgs
