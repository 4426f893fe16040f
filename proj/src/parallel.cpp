#include "codekit/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace codekit {

unsigned worker_count() {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("CODEKIT_THREADS")) {
        try {
            long v = std::stol(env);
            if (v < 1) v = 1;
            n = std::min<unsigned>(n, static_cast<unsigned>(v));
        } catch (...) {
        }
    }
    return n;
}

void parallel_chunks(std::uint64_t total,
                     const std::function<void(std::uint64_t, std::uint64_t, unsigned)>& fn) {
    unsigned workers = worker_count();
    if (total < workers) workers = total ? static_cast<unsigned>(total) : 1;
    if (workers <= 1) {
        fn(0, total, 0);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::uint64_t b = std::min<std::uint64_t>(total, std::uint64_t(w) * chunk);
        std::uint64_t e = std::min<std::uint64_t>(total, b + chunk);
        pool.emplace_back([&fn, b, e, w] { fn(b, e, w); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace codekit
