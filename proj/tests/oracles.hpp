#pragma once

// Independent reimplementations used to cross-check the library. Everything
// here favors the most literal translation of the definitions over speed:
// bit-by-bit loops instead of mask arithmetic, pair scans instead of
// bucketing, plain backtracking instead of branch and bound.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "sban/coloring.hpp"
#include "sban/confusability.hpp"
#include "sban/core.hpp"
#include "sban/graph.hpp"
#include "sban/rng.hpp"

namespace oracle {

using sban::Graph;
using sban::Word;

// Updates exactly the automata of blocks 0..j-1, one bit at a time.
inline Word partial_update(const sban::BooleanNetwork& f, const sban::UpdateSchedule& w,
                           int j, Word x) {
    const Word image = f.table()[x];
    Word out = 0;
    for (int i = 0; i < f.size(); ++i) {
        bool in_prefix = false;
        for (int b = 0; b < j; ++b)
            for (int a : w.blocks()[b])
                if (a == i) in_prefix = true;
        const bool bit = in_prefix ? ((image >> i) & 1) : ((x >> i) & 1);
        if (bit) out |= Word{1} << i;
    }
    return out;
}

// One full scheduled step, block by block, re-reading the table after every
// block fires.
inline Word scheduled_step(const sban::BooleanNetwork& f, const sban::UpdateSchedule& w,
                           Word x) {
    Word cur = x;
    for (const auto& block : w.blocks()) {
        const Word image = f.table()[cur];
        for (int a : block) {
            cur &= ~(Word{1} << a);
            cur |= image & (Word{1} << a);
        }
    }
    return cur;
}

// All steps i in [0, p] at which the partial updates of x and x2 coincide.
inline std::set<int> cc_set(const sban::BooleanNetwork& f, const sban::UpdateSchedule& w,
                            Word x, Word x2) {
    std::set<int> steps;
    const int p = static_cast<int>(w.blocks().size());
    for (int i = 0; i <= p; ++i)
        if (partial_update(f, w, i, x) == partial_update(f, w, i, x2)) steps.insert(i);
    return steps;
}

// Confusable pairs with distinct images, by scanning every pair at every
// step straight from the definitions.
inline std::set<std::pair<Word, Word>> necc_edges(const sban::BooleanNetwork& f,
                                                  const sban::UpdateSchedule& w) {
    std::set<std::pair<Word, Word>> edges;
    const Word count = f.state_count();
    for (Word x = 0; x < count; ++x)
        for (Word x2 = x + 1; x2 < count; ++x2) {
            if (f.table()[x] == f.table()[x2]) continue;
            if (!cc_set(f, w, x, x2).empty()) edges.insert({x, x2});
        }
    return edges;
}

inline bool colorable_from(const Graph& g, int k, std::vector<int>& col, std::uint32_t at) {
    if (at == g.node_count()) return true;
    for (int c = 0; c < k; ++c) {
        bool clash = false;
        for (std::uint32_t nb : g.neighbors(at))
            if (nb < at && col[nb] == c) clash = true;
        if (clash) continue;
        col[at] = c;
        if (colorable_from(g, k, col, at + 1)) return true;
    }
    col[at] = -1;
    return false;
}

// Smallest k admitting a proper coloring; plain try-every-assignment search,
// suitable for a few dozen nodes at most.
inline int chromatic_number(const Graph& g) {
    if (g.node_count() == 0) return 0;
    for (int k = 1;; ++k) {
        std::vector<int> col(g.node_count(), -1);
        if (colorable_from(g, k, col, 0)) return k;
    }
}

inline void maximal_cliques_rec(const Graph& g, std::vector<std::uint32_t>& r,
                                std::vector<std::uint32_t> p, std::vector<std::uint32_t> x,
                                std::vector<std::vector<std::uint32_t>>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    while (!p.empty()) {
        const std::uint32_t v = p.back();
        std::vector<std::uint32_t> p2, x2;
        for (std::uint32_t u : p)
            if (g.has_edge(u, v)) p2.push_back(u);
        for (std::uint32_t u : x)
            if (g.has_edge(u, v)) x2.push_back(u);
        r.push_back(v);
        maximal_cliques_rec(g, r, std::move(p2), std::move(x2), out);
        r.pop_back();
        p.pop_back();
        x.push_back(v);
    }
}

// Every maximal clique, unpivoted Bron-Kerbosch. Isolated nodes come back as
// singleton cliques.
inline std::vector<std::vector<std::uint32_t>> maximal_cliques(const Graph& g) {
    std::vector<std::uint32_t> r, p, x;
    for (std::uint32_t v = 0; v < g.node_count(); ++v) p.push_back(v);
    std::vector<std::vector<std::uint32_t>> out;
    maximal_cliques_rec(g, r, std::move(p), std::move(x), out);
    for (auto& clique : out) std::sort(clique.begin(), clique.end());
    return out;
}

inline int max_clique_size(const Graph& g) {
    int best = g.node_count() > 0 ? 1 : 0;
    for (const auto& clique : maximal_cliques(g))
        best = std::max(best, static_cast<int>(clique.size()));
    return best;
}

// Erdos-Renyi style graph from a seeded generator, for solver cross-checks.
inline Graph random_graph(std::uint32_t nodes, std::uint32_t percent, std::uint64_t seed) {
    sban::SplitMix64 rng{seed};
    std::vector<Graph::Edge> edges;
    for (std::uint32_t u = 0; u < nodes; ++u)
        for (std::uint32_t v = u + 1; v < nodes; ++v)
            if (rng.below(100) < percent) edges.push_back({u, v});
    return Graph(nodes, std::move(edges));
}

} // namespace oracle
