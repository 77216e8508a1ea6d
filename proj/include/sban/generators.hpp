#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "sban/core.hpp"
#include "sban/rng.hpp"

namespace sban {

// Named and seeded instance families. Random kinds are pure functions of
// (n, seed) and produce identical tables on every platform.
struct GeneratorSpec {
    std::string kind; // swap | figure4 | random | random-bijective | constant | identity
    int n = 0;
    std::uint64_t seed = 0;
};

struct ScheduledNetwork {
    BooleanNetwork network;
    UpdateSchedule schedule;
};

// The half-exchange permutation network under the simple sequential
// schedule: automaton i reads its partner across the halves. For odd n the
// last automaton just copies itself and the exchange acts on the rest.
ScheduledNetwork swap_network(int n);

// Fixed 4-automaton instance whose confusability graph is a 3-edge path and
// whose image quotient is a triangle plus an isolated vertex; sequential
// schedule. Small enough to check every claim by hand.
ScheduledNetwork figure_example();

BooleanNetwork identity_network(int n);
BooleanNetwork constant_network(int n);

BooleanNetwork random_network(int n, std::uint64_t seed);
BooleanNetwork random_bijective(int n, std::uint64_t seed);

// Uniform draw over all ordered partitions of {0,...,n-1}.
UpdateSchedule random_schedule(int n, std::uint64_t seed);
// Uniform draw over ordered partitions with exactly `blocks` blocks.
UpdateSchedule random_schedule_with_blocks(int n, int blocks, std::uint64_t seed);

// Ordered partition counts; throws resource_error once the count overflows
// 64 bits (n >= 19).
std::uint64_t ordered_partition_count(int n);

// Instantiates spec.kind; the schedule is the generator's natural one for
// swap/figure4 and simple sequential otherwise.
ScheduledNetwork build_instance(const GeneratorSpec& spec);

} // namespace sban
