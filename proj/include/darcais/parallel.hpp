#ifndef DARCAIS_PARALLEL_HPP
#define DARCAIS_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace darcais {

// Runs fn(i) for i in [lo, hi) on `jobs` threads (0 = hardware concurrency).
// Work items must be independent; callers keep results in per-index slots so
// output never depends on scheduling.
template <class F>
void parallel_for(long lo, long hi, int jobs, F&& fn) {
    if (hi <= lo) return;
    unsigned n = jobs > 0 ? static_cast<unsigned>(jobs)
                          : std::max(1u, std::thread::hardware_concurrency());
    n = std::min<unsigned>(n, static_cast<unsigned>(hi - lo));
    if (n <= 1) {
        for (long i = lo; i < hi; ++i) fn(i);
        return;
    }
    std::atomic<long> next{lo};
    std::exception_ptr err;
    std::mutex err_mu;
    auto worker = [&] {
        try {
            for (long i = next.fetch_add(1); i < hi; i = next.fetch_add(1)) fn(i);
        } catch (...) {
            std::lock_guard<std::mutex> lock(err_mu);
            if (!err) err = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

} // namespace darcais

#endif
