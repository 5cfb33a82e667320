#ifndef KDIS_SRC_PARALLEL_HPP
#define KDIS_SRC_PARALLEL_HPP

#include <atomic>
#include <thread>
#include <vector>

namespace kdis {

/// jobs <= 0 selects the hardware count, capped at 8.
inline int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    return static_cast<int>(hw > 8 ? 8 : hw);
}

/// Run fn(index) for every index in [0, count) on `workers` threads.  Work
/// items must write only to their own slots; callers merge in index order so
/// results do not depend on scheduling.
template <typename Fn>
void parallel_for_index(std::size_t count, int workers, Fn&& fn) {
    if (count == 0) return;
    workers = std::min<std::size_t>(workers, count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers - 1));
    for (int t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
}

} // namespace kdis

#endif
