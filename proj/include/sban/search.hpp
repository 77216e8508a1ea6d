#pragma once

// Worst-case hunt: how many auxiliary automata can an n-automaton SBAN
// demand? Exhaustive enumeration at toy sizes, seeded sampling beyond, with
// batch checkpointing so long runs survive interruption.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sban/generators.hpp"
#include "sban/synthesis.hpp"

namespace sban {

struct SearchOptions {
    int n = 2;
    std::string strategy = "exhaustive"; // exhaustive | random
    std::uint64_t samples = 10000;       // random strategy only
    std::uint64_t seed = 0;
    std::uint64_t chromatic_budget = default_chromatic_budget;
    bool include_swap = true;      // random strategy: make instance 0 the swap network
    bool stratify_blocks = false;  // random strategy: cycle schedule block counts
    bool collapse_schedules = false; // exhaustive: one schedule per relabeling class
    std::uint64_t instance_limit = 0; // stop after this many instances this call (0 = all)
    std::uint64_t flush_every = 1000; // checkpoint cadence, in instances
    std::string checkpoint_path;      // empty disables checkpointing
    int threads = 1;
    int max_n = default_graph_cap;
};

struct SearchViolation {
    std::uint64_t instance = 0;
    int kappa_value = 0;
    ScheduledNetwork witness;
};

struct SearchReport {
    // identity of the searched family (echoed into checkpoints; a resume
    // with different values is rejected)
    int n = 0;
    std::string strategy;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::uint64_t chromatic_budget = 0;
    bool include_swap = false;
    bool stratify_blocks = false;
    bool collapse_schedules = false;

    std::uint64_t instances_total = 0;
    std::uint64_t cursor = 0; // next instance index; == instances_total when done
    bool completed = false;

    int worst_exact = -1; // largest exact kappa seen; -1 until one resolves
    std::optional<ScheduledNetwork> witness;
    std::optional<GeneratorSpec> witness_spec; // set when the witness is a named instance

    std::uint64_t inexact_count = 0; // instances whose chromatic search hit the budget
    int unresolved_upper_max = -1;   // largest kappa upper bound among those

    std::string conjecture; // respected | violated | undecided-due-to-bounds
    std::vector<SearchViolation> violations;
    std::uint64_t budget_spent = 0; // chromatic expansions across all instances
};

// Maximum kappa over the instance family described by opt. Deterministic in
// (options minus threads); resumable through opt.checkpoint_path.
SearchReport search_worst_kappa(const SearchOptions& opt);

} // namespace sban
