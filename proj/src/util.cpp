#include "lnd/util.hpp"

#include <cstdlib>
#include <thread>
#include <vector>

namespace lnd {

int thread_limit() {
    static const int cached = [] {
        const char* env = std::getenv("LN_DEFORM_THREADS");
        if (!env) return 1;
        long v = std::strtol(env, nullptr, 10);
        if (v < 1) v = 1;
        if (v > 64) v = 64;
        return static_cast<int>(v);
    }();
    return cached;
}

void parallel_for(long n, const std::function<void(long)>& f) {
    const int workers = thread_limit();
    if (workers <= 1 || n < 4) {
        for (long i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    const int used = static_cast<int>(std::min<long>(workers, n));
    pool.reserve(used);
    for (int w = 0; w < used; ++w) {
        pool.emplace_back([&, w] {
            for (long i = w; i < n; i += used) f(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace lnd
