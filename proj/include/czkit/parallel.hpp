#ifndef CZKIT_PARALLEL_HPP
#define CZKIT_PARALLEL_HPP

#include <cstddef>
#include <thread>
#include <vector>

namespace czkit {

/// Number of worker threads; 0 or negative means hardware concurrency.
int effective_threads(int requested);

/// Global default used by the library when callers do not pass a count.
void set_default_threads(int n);
int default_threads();

/// Runs f(i) for i in [0, n).  Work is split into contiguous chunks, one
/// per thread, so results written to disjoint slots are deterministic.
template <class F>
void parallel_for(std::size_t n, F&& f, int threads = 0) {
    const int nt = effective_threads(threads == 0 ? default_threads() : threads);
    if (nt <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (n + nt - 1) / nt;
    for (int t = 0; t < nt; ++t) {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &f] {
            for (std::size_t i = lo; i < hi; ++i) f(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace czkit

#endif
