#pragma once

#include <vector>

#include "sban/bits.hpp"
#include "sban/errors.hpp"

namespace sban {

// A block-sequential update schedule: an ordered partition (W_0,...,W_{p-1})
// of the automata set {0,...,n-1}. Validation is eager, so a constructed
// schedule is always a genuine ordered partition. Block order is meaningful;
// the order of indices inside a block is not, and blocks are kept sorted.
class UpdateSchedule {
public:
    UpdateSchedule(int n, std::vector<std::vector<int>> blocks);

    // The parallel schedule ({0,...,n-1}).
    static UpdateSchedule parallel(int n);
    // The simple sequential schedule ({0},{1},...,{n-1}).
    static UpdateSchedule sequential(int n);

    int size() const { return n_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    const std::vector<int>& block(int j) const { return blocks_[static_cast<std::size_t>(j)]; }

    // Union of W_j as a bit mask.
    Word block_mask(int j) const { return block_masks_[static_cast<std::size_t>(j)]; }
    // Union of W_0..W_{j-1}; prefix_mask(0) = 0, prefix_mask(p) covers everything.
    Word prefix_mask(int j) const { return prefix_masks_[static_cast<std::size_t>(j)]; }

    // Index of the block containing automaton i.
    int block_of(int i) const;

    bool operator==(const UpdateSchedule& other) const {
        return n_ == other.n_ && blocks_ == other.blocks_;
    }

private:
    int n_;
    std::vector<std::vector<int>> blocks_;
    std::vector<Word> block_masks_;
    std::vector<Word> prefix_masks_;
    std::vector<int> block_of_;
};

} // namespace sban
