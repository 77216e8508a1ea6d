#pragma once

#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace sban {

// Turns a requested thread count into an actual one: 0 means "use the
// hardware", anything else is taken literally.
inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Splits [begin, end) into one contiguous chunk per worker and runs
// fn(chunk_begin, chunk_end, chunk_index) on each. Callers own determinism:
// chunk boundaries depend only on the range and thread count, and results
// must be combined by chunk index, never by completion order.
template <typename Fn>
void parallel_chunks(std::uint64_t begin, std::uint64_t end, int threads, Fn&& fn) {
    const std::uint64_t total = end > begin ? end - begin : 0;
    if (total == 0) return;
    std::uint64_t workers = static_cast<std::uint64_t>(threads < 1 ? 1 : threads);
    if (workers > total) workers = total;
    if (workers == 1) {
        fn(begin, end, static_cast<std::size_t>(0));
        return;
    }
    const std::uint64_t base = total / workers;
    const std::uint64_t extra = total % workers;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    std::vector<std::exception_ptr> failures(static_cast<std::size_t>(workers));
    std::uint64_t at = begin;
    for (std::uint64_t c = 0; c < workers; ++c) {
        const std::uint64_t len = base + (c < extra ? 1 : 0);
        const std::uint64_t lo = at;
        const std::uint64_t hi = at + len;
        at = hi;
        pool.emplace_back([&fn, &failures, lo, hi, c] {
            try {
                fn(lo, hi, static_cast<std::size_t>(c));
            } catch (...) {
                failures[static_cast<std::size_t>(c)] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    // Rethrow the failure of the lowest chunk so the surfaced error does not
    // depend on thread completion order.
    for (const auto& failure : failures)
        if (failure) std::rethrow_exception(failure);
}

} // namespace sban
