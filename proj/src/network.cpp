#include "sban/network.hpp"

#include <string>

namespace sban {

BooleanNetwork::BooleanNetwork(int n, std::vector<Word> table)
    : n_(n), table_(std::move(table)) {
    if (n < 1 || n > max_automata)
        throw domain_error("network size " + std::to_string(n) + " out of range [1, " +
                           std::to_string(max_automata) + "]");
    const std::size_t want = std::size_t{1} << n;
    if (table_.size() != want)
        throw domain_error("truth table has " + std::to_string(table_.size()) +
                           " entries, expected " + std::to_string(want));
    const Word m = full_mask(n);
    for (std::size_t x = 0; x < table_.size(); ++x)
        if (table_[x] > m)
            throw domain_error("table[" + std::to_string(x) + "] = " +
                               std::to_string(table_[x]) + " exceeds the " +
                               std::to_string(n) + "-bit configuration range");
}

} // namespace sban
