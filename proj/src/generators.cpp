#include "sban/generators.hpp"

#include <numeric>
#include <string>
#include <vector>

namespace sban {

namespace {

// surj[m][q] = number of ordered partitions of m labeled elements into
// exactly q nonempty blocks. Recurrence over the largest element: it either
// occupies a new block (inserted at any of q positions) or joins one of the
// q blocks of a smaller partition.
std::vector<std::vector<std::uint64_t>> surjection_table(int n) {
    std::vector<std::vector<std::uint64_t>> s(static_cast<std::size_t>(n) + 1);
    s[0] = {1};
    for (int m = 1; m <= n; ++m) {
        s[static_cast<std::size_t>(m)].assign(static_cast<std::size_t>(m) + 1, 0);
        for (int q = 1; q <= m; ++q) {
            const std::uint64_t branch_new = s[static_cast<std::size_t>(m - 1)]
                                              [static_cast<std::size_t>(q - 1)];
            const std::uint64_t branch_join =
                q <= m - 1 ? s[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(q)]
                           : 0;
            std::uint64_t sum = 0, total = 0;
            if (__builtin_add_overflow(branch_new, branch_join, &sum) ||
                __builtin_mul_overflow(sum, static_cast<std::uint64_t>(q), &total))
                throw resource_error("ordered partition counts overflow 64 bits at n = " +
                                     std::to_string(m));
            s[static_cast<std::size_t>(m)][static_cast<std::size_t>(q)] = total;
        }
    }
    return s;
}

std::vector<std::vector<int>> assemble_partition(int m, int q, SplitMix64& rng,
                                                 const std::vector<std::vector<std::uint64_t>>& s) {
    if (m == 0) return {};
    const int e = m - 1;
    const std::uint64_t alone =
        static_cast<std::uint64_t>(q) * s[static_cast<std::size_t>(m - 1)]
                                         [static_cast<std::size_t>(q - 1)];
    const std::uint64_t total = s[static_cast<std::size_t>(m)][static_cast<std::size_t>(q)];
    const std::uint64_t r = rng.below(total);
    const auto pos = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(q)));
    if (r < alone) {
        auto rest = assemble_partition(m - 1, q - 1, rng, s);
        rest.insert(rest.begin() + static_cast<std::ptrdiff_t>(pos), {e});
        return rest;
    }
    auto rest = assemble_partition(m - 1, q, rng, s);
    rest[pos].push_back(e);
    return rest;
}

UpdateSchedule sample_schedule(int n, int fixed_blocks, std::uint64_t seed) {
    if (n < 1 || n > max_automata)
        throw domain_error("schedule size " + std::to_string(n) + " out of range");
    const auto s = surjection_table(n);
    SplitMix64 rng = derive_stream(seed, 0x5c4ed71e11ull);
    int q;
    if (fixed_blocks > 0) {
        if (fixed_blocks > n)
            throw domain_error("cannot split " + std::to_string(n) + " automata into " +
                               std::to_string(fixed_blocks) + " nonempty blocks");
        q = fixed_blocks;
    } else {
        std::uint64_t total = 0;
        for (int b = 1; b <= n; ++b) {
            std::uint64_t next = 0;
            if (__builtin_add_overflow(total, s[static_cast<std::size_t>(n)][static_cast<std::size_t>(b)], &next))
                throw resource_error("ordered partition count overflows 64 bits");
            total = next;
        }
        std::uint64_t r = rng.below(total);
        q = n;
        for (int b = 1; b <= n; ++b) {
            const std::uint64_t here = s[static_cast<std::size_t>(n)][static_cast<std::size_t>(b)];
            if (r < here) {
                q = b;
                break;
            }
            r -= here;
        }
    }
    return UpdateSchedule(n, assemble_partition(n, q, rng, s));
}

} // namespace

std::uint64_t ordered_partition_count(int n) {
    if (n < 0) throw domain_error("negative size");
    if (n == 0) return 1;
    const auto s = surjection_table(n);
    std::uint64_t total = 0;
    for (int q = 1; q <= n; ++q) {
        std::uint64_t next = 0;
        if (__builtin_add_overflow(total, s[static_cast<std::size_t>(n)][static_cast<std::size_t>(q)], &next))
            throw resource_error("ordered partition count overflows 64 bits at n = " +
                                 std::to_string(n));
        total = next;
    }
    return total;
}

UpdateSchedule random_schedule(int n, std::uint64_t seed) { return sample_schedule(n, 0, seed); }

UpdateSchedule random_schedule_with_blocks(int n, int blocks, std::uint64_t seed) {
    if (blocks < 1) throw domain_error("block count must be positive");
    return sample_schedule(n, blocks, seed);
}

ScheduledNetwork swap_network(int n) {
    if (n < 2 || n > max_automata)
        throw domain_error("swap network needs 2 <= n <= " + std::to_string(max_automata) +
                           ", got " + std::to_string(n));
    const int q = n / 2;
    const Word count = full_mask(n) + 1;
    std::vector<Word> table(count);
    for (Word x = 0; x < count; ++x) {
        Word y = 0;
        for (int i = 0; i < q; ++i) {
            if (get_bit(x, i + q)) y |= word_bit(i);
            if (get_bit(x, i)) y |= word_bit(i + q);
        }
        if (n % 2 == 1 && get_bit(x, n - 1)) y |= word_bit(n - 1);
        table[x] = y;
    }
    return {BooleanNetwork(n, std::move(table)), UpdateSchedule::sequential(n)};
}

ScheduledNetwork figure_example() {
    std::vector<Word> table(16, 15);
    table[0] = 0;  // 0000 -> 0000
    table[1] = 2;  // 1000 -> 0100
    table[2] = 10; // 0100 -> 0101
    table[3] = 0;  // 1100 -> 0000
    return {BooleanNetwork(4, std::move(table)), UpdateSchedule::sequential(4)};
}

BooleanNetwork identity_network(int n) {
    const Word count = full_mask(n) + 1;
    std::vector<Word> table(count);
    std::iota(table.begin(), table.end(), 0u);
    return BooleanNetwork(n, std::move(table));
}

BooleanNetwork constant_network(int n) {
    return BooleanNetwork(n, std::vector<Word>(full_mask(n) + 1, 0));
}

BooleanNetwork random_network(int n, std::uint64_t seed) {
    if (n < 1 || n > max_automata)
        throw domain_error("random network size " + std::to_string(n) + " out of range");
    const Word count = full_mask(n) + 1;
    std::vector<Word> table(count);
    for (Word x = 0; x < count; ++x)
        table[x] = static_cast<Word>(derive_stream(seed, x).next()) & full_mask(n);
    return BooleanNetwork(n, std::move(table));
}

BooleanNetwork random_bijective(int n, std::uint64_t seed) {
    if (n < 1 || n > max_automata)
        throw domain_error("random permutation size " + std::to_string(n) + " out of range");
    const Word count = full_mask(n) + 1;
    std::vector<Word> table(count);
    std::iota(table.begin(), table.end(), 0u);
    SplitMix64 rng = derive_stream(seed, 0xb17ec7ab1eull);
    for (Word i = count - 1; i > 0; --i) {
        const auto j = static_cast<Word>(rng.below(static_cast<std::uint64_t>(i) + 1));
        std::swap(table[i], table[j]);
    }
    return BooleanNetwork(n, std::move(table));
}

ScheduledNetwork build_instance(const GeneratorSpec& spec) {
    if (spec.kind == "swap") return swap_network(spec.n);
    if (spec.kind == "figure4") {
        if (spec.n != 0 && spec.n != 4)
            throw domain_error("figure4 is a fixed 4-automaton instance; --n must be 4 or omitted");
        return figure_example();
    }
    auto with_sequential = [](BooleanNetwork net) {
        const int n = net.size();
        return ScheduledNetwork{std::move(net), UpdateSchedule::sequential(n)};
    };
    if (spec.kind == "identity") return with_sequential(identity_network(spec.n));
    if (spec.kind == "constant") return with_sequential(constant_network(spec.n));
    if (spec.kind == "random") return with_sequential(random_network(spec.n, spec.seed));
    if (spec.kind == "random-bijective")
        return with_sequential(random_bijective(spec.n, spec.seed));
    throw domain_error("unknown generator kind '" + spec.kind +
                       "'; expected swap | figure4 | random | random-bijective | "
                       "constant | identity");
}

} // namespace sban
