#pragma once

#include <future>
#include <thread>
#include <vector>

namespace zr {

inline int default_jobs() {
    unsigned h = std::thread::hardware_concurrency();
    return h == 0 ? 1 : int(h);
}

// Chunked map-reduce over [0, count). Each chunk is processed independently
// and results are merged in chunk order, so the reduction is deterministic
// for any job count as long as `merge` is associative.
template <class R, class Fn, class Merge>
R parallel_reduce(long long count, int jobs, R init, Fn&& per_index_into, Merge&& merge) {
    if (jobs < 1) jobs = 1;
    if (jobs == 1 || count < 2048) {
        R acc = init;
        for (long long i = 0; i < count; ++i) per_index_into(i, acc);
        return acc;
    }
    long long chunk = (count + jobs - 1) / jobs;
    std::vector<std::future<R>> futs;
    for (int j = 0; j < jobs; ++j) {
        long long lo = j * chunk, hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        futs.push_back(std::async(std::launch::async, [&, lo, hi]() {
            R acc = init;
            for (long long i = lo; i < hi; ++i) per_index_into(i, acc);
            return acc;
        }));
    }
    R out = init;
    for (auto& f : futs) out = merge(out, f.get());
    return out;
}

} // namespace zr
