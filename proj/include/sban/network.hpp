#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sban/bits.hpp"
#include "sban/errors.hpp"

namespace sban {

// A Boolean automata network F : B^n -> B^n stored as its full truth table,
// table[x] = F(x). Every local function is implicit: f_i(x) is bit i of
// table[x]. The full table keeps updates O(1) at the price of 2^n words,
// which is the honest cost of the exact algorithms built on top.
class BooleanNetwork {
public:
    BooleanNetwork(int n, std::vector<Word> table);

    int size() const { return n_; }
    Word state_count() const { return full_mask(n_) + 1; }
    Word mask() const { return full_mask(n_); }

    Word apply(Word x) const { return table_[x]; }
    bool local(int i, Word x) const { return get_bit(table_[x], i); }

    const std::vector<Word>& table() const { return table_; }

    bool operator==(const BooleanNetwork& other) const {
        return n_ == other.n_ && table_ == other.table_;
    }

private:
    int n_;
    std::vector<Word> table_;
};

} // namespace sban
