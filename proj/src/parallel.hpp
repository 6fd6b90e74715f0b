#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace sqz::detail {

inline int max_threads() {
    if (const char* env = std::getenv("SQUEEZE_THREADS")) {
        try {
            const int v = std::stoi(env);
            if (v < 1) return 1;
            if (v > 256) return 256;
            return v;
        } catch (...) {
            // fall through to hardware default on unparsable input
        }
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

// Runs fn(i) for i in [0, n). Work items must be independent; results should
// be written to preallocated slots so the output is identical regardless of
// the thread count.
template <typename Fn>
void parallel_for(long n, Fn&& fn) {
    const int threads = static_cast<int>(std::min<long>(max_threads(), n));
    if (threads <= 1) {
        for (long i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<long> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mu;
    auto worker = [&] {
        for (;;) {
            const long i = next.fetch_add(1);
            if (i >= n || failed.load()) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!failed.exchange(true)) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace sqz::detail
