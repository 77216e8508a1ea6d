#pragma once

// Proper colorings and clique numbers for confusability graphs. The exact
// chromatic search is budgeted: when the budget runs out it degrades to
// certified bounds instead of failing.

#include <cstdint>
#include <span>
#include <vector>

#include "sban/confusability.hpp"
#include "sban/graph.hpp"

namespace sban {

inline constexpr std::uint64_t default_chromatic_budget = 10'000'000;
inline constexpr std::uint32_t default_clique_node_cap = 4096;

// Total assignment node -> color with dense ids: 0..count-1, every id used.
struct Coloring {
    std::vector<int> colors;
    int count = 0;

    int color_of(std::uint32_t node) const { return colors[node]; }

    bool operator==(const Coloring& other) const {
        return count == other.count && colors == other.colors;
    }
};

// Builds a Coloring from raw ids, enforcing density.
Coloring make_coloring(std::vector<int> colors);

// Renumbers arbitrary non-negative ids densely by first occurrence.
Coloring normalize_coloring(const std::vector<int>& raw);

// True iff no edge is monochromatic. Shape mismatches (wrong length,
// ids outside 0..count-1) are errors, not "false".
bool validate_coloring(const Graph& g, const Coloring& c);

// Nodes sorted by degree descending (ties: ascending node id), each taking
// the smallest color absent among already-colored neighbors.
Coloring greedy_color_by_degree(const Graph& g);

struct ChromaticResult {
    int lower = 0;
    int upper = 0;
    bool exact = false;
    std::uint64_t budget_used = 0;
    Coloring witness;                  // proper coloring with `upper` colors
    std::vector<std::uint32_t> clique; // certifies the initial lower bound
};

// Iterative deepening on k from the clique lower bound, deciding
// k-colorability by DSATUR branch and bound with the clique pre-colored and
// fresh colors introduced in order. `budget` caps branch-node expansions;
// exhaustion returns exact=false with whatever bounds were certified.
// A non-empty seed_clique (which must be a clique) replaces the built-in
// greedy clique as the lower-bound certificate.
ChromaticResult exact_chromatic_number(const Graph& g,
                                       std::uint64_t budget = default_chromatic_budget,
                                       std::span<const std::uint32_t> seed_clique = {});

struct CliqueResult {
    int size = 0;
    std::vector<std::uint32_t> members;
};

// Exact clique number of a confusability graph, computed from the network
// rather than the edge list: within a bucket of configurations sharing the
// same partial update at some step, one representative per distinct image
// forms a clique, and every clique arises this way at its common step.
CliqueResult max_clique_necc(const BooleanNetwork& f, const UpdateSchedule& w, const Graph& g);

// Exact clique number of an arbitrary graph (branch and bound with pivoting);
// independent of the bucket argument above, so the two can cross-check.
CliqueResult max_clique_generic(const Graph& g,
                                std::uint32_t node_cap = default_clique_node_cap);

} // namespace sban
