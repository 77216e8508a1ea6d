#include "sban/schedule.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace sban {

UpdateSchedule::UpdateSchedule(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
    if (n < 1 || n > max_automata)
        throw domain_error("schedule size " + std::to_string(n) + " out of range [1, " +
                           std::to_string(max_automata) + "]");
    if (blocks_.empty())
        throw domain_error("schedule has no blocks");

    block_of_.assign(static_cast<std::size_t>(n), -1);
    block_masks_.reserve(blocks_.size());
    prefix_masks_.reserve(blocks_.size() + 1);
    prefix_masks_.push_back(0);

    for (std::size_t j = 0; j < blocks_.size(); ++j) {
        auto& blk = blocks_[j];
        if (blk.empty())
            throw domain_error("block " + std::to_string(j) + " is empty");
        std::sort(blk.begin(), blk.end());
        Word m = 0;
        for (int i : blk) {
            if (i < 0 || i >= n)
                throw domain_error("block " + std::to_string(j) + " contains automaton " +
                                   std::to_string(i) + ", valid range is [0, " +
                                   std::to_string(n - 1) + "]");
            if (block_of_[static_cast<std::size_t>(i)] != -1)
                throw domain_error("automaton " + std::to_string(i) +
                                   " appears in more than one block");
            block_of_[static_cast<std::size_t>(i)] = static_cast<int>(j);
            m |= word_bit(i);
        }
        block_masks_.push_back(m);
        prefix_masks_.push_back(prefix_masks_.back() | m);
    }

    if (prefix_masks_.back() != full_mask(n)) {
        for (int i = 0; i < n; ++i)
            if (block_of_[static_cast<std::size_t>(i)] == -1)
                throw domain_error("automaton " + std::to_string(i) +
                                   " is missing from the schedule");
    }
}

UpdateSchedule UpdateSchedule::parallel(int n) {
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    return UpdateSchedule(n, {all});
}

UpdateSchedule UpdateSchedule::sequential(int n) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) blocks.push_back({i});
    return UpdateSchedule(n, std::move(blocks));
}

int UpdateSchedule::block_of(int i) const {
    if (i < 0 || i >= n_)
        throw domain_error("automaton " + std::to_string(i) + " out of range");
    return block_of_[static_cast<std::size_t>(i)];
}

} // namespace sban
