#pragma once

// Configurations of an n-automaton Boolean network are packed into machine
// words: automaton i lives at bit i, so the configuration (x_0,...,x_{n-1})
// is the integer sum x_i * 2^i.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sban/errors.hpp"

namespace sban {

using Word = std::uint32_t;

// Hard ceiling on the automata count; keeps every truth table addressable
// as vector<Word> and every configuration inside a 32-bit word.
inline constexpr int max_automata = 24;

inline constexpr Word word_bit(int i) { return Word{1} << i; }

// All configurations of n automata are 0 .. full_mask(n).
inline constexpr Word full_mask(int n) {
    return n >= 32 ? ~Word{0} : (Word{1} << n) - 1;
}

inline constexpr bool get_bit(Word w, int i) { return (w >> i) & 1u; }

inline Word encode_bits(std::span<const bool> bits) {
    if (bits.size() > static_cast<std::size_t>(max_automata))
        throw domain_error("configuration has " + std::to_string(bits.size()) +
                           " bits, limit is " + std::to_string(max_automata));
    Word w = 0;
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) w |= word_bit(static_cast<int>(i));
    return w;
}

inline Word encode_bits(std::span<const bool> bits, int n) {
    if (bits.size() != static_cast<std::size_t>(n))
        throw domain_error("configuration has " + std::to_string(bits.size()) +
                           " bits, expected " + std::to_string(n));
    return encode_bits(bits);
}

inline std::vector<bool> decode_bits(Word w, int n) {
    if (n < 0 || n > max_automata)
        throw domain_error("automata count " + std::to_string(n) + " out of range");
    if (w > full_mask(n))
        throw domain_error("configuration " + std::to_string(w) +
                           " does not fit in " + std::to_string(n) + " bits");
    std::vector<bool> bits(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) bits[static_cast<std::size_t>(i)] = get_bit(w, i);
    return bits;
}

// Renders x_0 first, matching the usual tuple notation for configurations.
inline std::string config_to_string(Word w, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        if (get_bit(w, i)) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

inline Word parse_config(const std::string& s) {
    if (s.size() > static_cast<std::size_t>(max_automata))
        throw domain_error("configuration string longer than " + std::to_string(max_automata));
    Word w = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1') w |= word_bit(static_cast<int>(i));
        else if (s[i] != '0')
            throw domain_error("configuration string must be over {0,1}, got '" +
                               std::string(1, s[i]) + "'");
    }
    return w;
}

// Smallest k with 2^k >= v; used to size the auxiliary color register.
inline int ceil_log2(std::uint64_t v) {
    int k = 0;
    while ((std::uint64_t{1} << k) < v) ++k;
    return k;
}

} // namespace sban
