#include "specsat/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace specsat {

int worker_count() {
    if (const char* env = std::getenv("SPECSAT_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    const int workers = worker_count();
    if (workers <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto body = [&] {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    };
    std::vector<std::thread> pool;
    int spawn = static_cast<int>(std::min<std::size_t>(count, static_cast<std::size_t>(workers)));
    pool.reserve(spawn - 1);
    for (int w = 1; w < spawn; ++w) pool.emplace_back(body);
    body();
    for (std::thread& th : pool) th.join();
}

} // namespace specsat
