#pragma once

// Update semantics for block-sequential schedules, plus the machinery for
// comparing a network against a larger one that simulates it through an
// embedding of the original automata.

#include <optional>
#include <vector>

#include "sban/bits.hpp"
#include "sban/network.hpp"
#include "sban/schedule.hpp"

namespace sban {

// One synchronous update of the automata in `mask`; the rest hold their state.
inline Word update_block(const BooleanNetwork& f, Word x, Word mask) {
    return (f.apply(x) & mask) | (x & ~mask);
}

// One synchronous update of the first j blocks of w taken together.
// j = 0 is the identity, j = p updates everything at once.
inline Word partial_parallel_update(const BooleanNetwork& f, const UpdateSchedule& w,
                                    Word x, int j) {
    return update_block(f, x, w.prefix_mask(j));
}

// The first j blocks applied one after another, each block synchronously.
Word prefix_scheduled_update(const BooleanNetwork& f, const UpdateSchedule& w, Word x, int j);

// A full sweep of the schedule: all p blocks in order.
inline Word step_scheduled(const BooleanNetwork& f, const UpdateSchedule& w, Word x) {
    return prefix_scheduled_update(f, w, x, w.block_count());
}

// The network computing one full sweep of (f, w) as a plain truth table.
BooleanNetwork compose_schedule(const BooleanNetwork& f, const UpdateSchedule& w);

// An injective placement of n automata inside a network with m >= n automata.
// map()[i] is where automaton i lives in the larger network; projection()
// reads the embedded configuration back out of a larger one.
class Embedding {
public:
    Embedding(int n, int m, std::vector<int> map);

    // Automata 0..n-1 of the larger network carry the original ones.
    static Embedding prefix(int n, int m);

    int domain_size() const { return n_; }
    int codomain_size() const { return m_; }
    const std::vector<int>& map() const { return map_; }
    int image_of(int i) const { return map_[static_cast<std::size_t>(i)]; }
    // Bit mask over the m-bit space covered by the embedded automata.
    Word image_mask() const { return image_mask_; }

    Word project(Word z) const {
        Word x = 0;
        for (int i = 0; i < n_; ++i)
            if (get_bit(z, map_[static_cast<std::size_t>(i)])) x |= word_bit(i);
        return x;
    }

    bool operator==(const Embedding& other) const {
        return n_ == other.n_ && m_ == other.m_ && map_ == other.map_;
    }

private:
    int n_;
    int m_;
    std::vector<int> map_;
    Word image_mask_;
};

// True iff wp schedules the embedded automata in the same relative order as w
// schedules the originals: blocks of w may split or merge in wp only in ways
// that preserve every "updated no later than" relation between original pairs.
bool validate_schedule_extension(const UpdateSchedule& w, const UpdateSchedule& wp,
                                 const Embedding& h);

// First z (in configuration order) where projecting a full sweep of (fp, wp)
// disagrees with a full sweep of (f, w) applied to the projection of z.
// Empty when (fp, wp) simulates (f, w) through h.
std::optional<Word> simulation_counterexample(const BooleanNetwork& fp, const UpdateSchedule& wp,
                                              const Embedding& h, const BooleanNetwork& f,
                                              const UpdateSchedule& w, int threads = 1);

bool check_simulation(const BooleanNetwork& fp, const UpdateSchedule& wp, const Embedding& h,
                      const BooleanNetwork& f, const UpdateSchedule& w, int threads = 1);

} // namespace sban
