#include "lik/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace lik {

int thread_budget() {
    static const int budget = [] {
        const char* env = std::getenv("LIK_THREADS");
        long v = env ? std::strtol(env, nullptr, 10) : 0;
        if (v <= 0) v = static_cast<long>(std::thread::hardware_concurrency());
        if (v <= 0) v = 1;
        return static_cast<int>(std::min<long>(v, 256));
    }();
    return budget;
}

void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& body) {
    if (n <= 0) return;
    const int workers = static_cast<int>(std::min<std::int64_t>(thread_budget(), n));
    if (workers <= 1 || n < 64) {
        for (std::int64_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::exception_ptr first_error;
    std::mutex error_mutex;
    const std::int64_t chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const std::int64_t lo = w * chunk;
        const std::int64_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &body, &first_error, &error_mutex] {
            try {
                for (std::int64_t i = lo; i < hi; ++i) body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace lik
