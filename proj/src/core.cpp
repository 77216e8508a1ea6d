#include "sban/core.hpp"

#include <string>

#include "sban/parallel.hpp"

namespace sban {

Word prefix_scheduled_update(const BooleanNetwork& f, const UpdateSchedule& w, Word x, int j) {
    if (f.size() != w.size())
        throw domain_error("network has " + std::to_string(f.size()) +
                           " automata but schedule has " + std::to_string(w.size()));
    if (j < 0 || j > w.block_count())
        throw domain_error("block prefix " + std::to_string(j) + " out of range [0, " +
                           std::to_string(w.block_count()) + "]");
    Word y = x;
    for (int t = 0; t < j; ++t) y = update_block(f, y, w.block_mask(t));
    return y;
}

BooleanNetwork compose_schedule(const BooleanNetwork& f, const UpdateSchedule& w) {
    const Word count = f.state_count();
    std::vector<Word> table(count);
    for (Word x = 0; x < count; ++x) table[x] = step_scheduled(f, w, x);
    return BooleanNetwork(f.size(), std::move(table));
}

Embedding::Embedding(int n, int m, std::vector<int> map)
    : n_(n), m_(m), map_(std::move(map)), image_mask_(0) {
    if (n < 1 || m < n || m > max_automata)
        throw domain_error("embedding of " + std::to_string(n) + " automata into " +
                           std::to_string(m) + " is out of range");
    if (map_.size() != static_cast<std::size_t>(n))
        throw domain_error("embedding map has " + std::to_string(map_.size()) +
                           " entries, expected " + std::to_string(n));
    for (int i = 0; i < n; ++i) {
        const int v = map_[static_cast<std::size_t>(i)];
        if (v < 0 || v >= m)
            throw domain_error("embedding sends automaton " + std::to_string(i) + " to " +
                               std::to_string(v) + ", valid range is [0, " +
                               std::to_string(m - 1) + "]");
        if (image_mask_ & word_bit(v))
            throw domain_error("embedding is not injective: target " + std::to_string(v) +
                               " is hit twice");
        image_mask_ |= word_bit(v);
    }
}

Embedding Embedding::prefix(int n, int m) {
    std::vector<int> map(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) map[static_cast<std::size_t>(i)] = i;
    return Embedding(n, m, std::move(map));
}

bool validate_schedule_extension(const UpdateSchedule& w, const UpdateSchedule& wp,
                                 const Embedding& h) {
    if (w.size() != h.domain_size())
        throw domain_error("schedule covers " + std::to_string(w.size()) +
                           " automata but embedding maps " + std::to_string(h.domain_size()));
    if (wp.size() != h.codomain_size())
        throw domain_error("extended schedule covers " + std::to_string(wp.size()) +
                           " automata but embedding targets " +
                           std::to_string(h.codomain_size()));
    const int n = w.size();
    for (int i = 0; i < n; ++i) {
        for (int i2 = 0; i2 < n; ++i2) {
            const bool before = w.block_of(i) <= w.block_of(i2);
            const bool after = wp.block_of(h.image_of(i)) <= wp.block_of(h.image_of(i2));
            if (before != after) return false;
        }
    }
    return true;
}

std::optional<Word> simulation_counterexample(const BooleanNetwork& fp, const UpdateSchedule& wp,
                                              const Embedding& h, const BooleanNetwork& f,
                                              const UpdateSchedule& w, int threads) {
    if (fp.size() != wp.size())
        throw domain_error("candidate network and schedule disagree on size");
    if (f.size() != w.size())
        throw domain_error("target network and schedule disagree on size");
    if (h.domain_size() != f.size() || h.codomain_size() != fp.size())
        throw domain_error("embedding shape does not match the two networks");

    const std::uint64_t count = fp.state_count();
    const int workers = resolve_threads(threads);
    constexpr Word no_hit = ~Word{0};
    std::vector<Word> first_hit(static_cast<std::size_t>(workers), no_hit);

    parallel_chunks(0, count, workers, [&](std::uint64_t lo, std::uint64_t hi, std::size_t c) {
        for (std::uint64_t z = lo; z < hi; ++z) {
            const Word zz = static_cast<Word>(z);
            const Word via_large = h.project(step_scheduled(fp, wp, zz));
            const Word via_small = step_scheduled(f, w, h.project(zz));
            if (via_large != via_small) {
                first_hit[c] = zz;
                return;
            }
        }
    });

    // Chunks cover ascending ranges, so the first non-empty slot is the
    // globally smallest counterexample.
    for (Word hit : first_hit)
        if (hit != no_hit) return hit;
    return std::nullopt;
}

bool check_simulation(const BooleanNetwork& fp, const UpdateSchedule& wp, const Embedding& h,
                      const BooleanNetwork& f, const UpdateSchedule& w, int threads) {
    return !simulation_counterexample(fp, wp, h, f, w, threads).has_value();
}

} // namespace sban
