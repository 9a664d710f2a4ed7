#pragma once

// Deterministic fan-out over a half-open integer range.
//
// The range is cut into a fixed number of blocks that does not depend on the
// worker count; results come back in block order, so any reduction the caller
// performs over them is identical for every WORKER_COUNT.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace cft {

inline constexpr std::uint64_t kDefaultBlocks = 64;

/// WORKER_COUNT from the environment, else hardware concurrency (at least 1).
inline unsigned worker_count_from_env() {
    if (const char* env = std::getenv("WORKER_COUNT")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

template <typename Result, typename Fn>
std::vector<Result> parallel_chunks(std::uint64_t lo, std::uint64_t hi, unsigned workers, Fn&& fn,
                                    std::uint64_t blocks = kDefaultBlocks) {
    if (hi <= lo) return {};
    const std::uint64_t span = hi - lo;
    const std::uint64_t count = std::max<std::uint64_t>(1, std::min(blocks, span));
    const std::uint64_t width = (span + count - 1) / count;
    const std::uint64_t real_count = (span + width - 1) / width;
    std::vector<Result> results(real_count);
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::uint64_t i = next.fetch_add(1);
            if (i >= real_count) return;
            const std::uint64_t b_lo = lo + i * width;
            const std::uint64_t b_hi = std::min(hi, b_lo + width);
            try {
                results[i] = fn(b_lo, b_hi);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(real_count);
            }
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(real_count)));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n);
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);
    return results;
}

}  // namespace cft
