#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sban/errors.hpp"

namespace sban {

// Immutable undirected simple graph. Edges are normalized to u < v, sorted
// and deduplicated at construction; adjacency is stored CSR-style.
class Graph {
public:
    using Edge = std::pair<std::uint32_t, std::uint32_t>;

    Graph(std::uint32_t nodes, std::vector<Edge> edges);

    std::uint32_t node_count() const { return nodes_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    std::span<const std::uint32_t> neighbors(std::uint32_t u) const {
        return {adj_.data() + offsets_[u], adj_.data() + offsets_[u + 1]};
    }
    std::uint32_t degree(std::uint32_t u) const {
        return static_cast<std::uint32_t>(offsets_[u + 1] - offsets_[u]);
    }
    bool has_edge(std::uint32_t u, std::uint32_t v) const;

    // Index of (min(u,v), max(u,v)) in edges(), or npos if absent.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t edge_index(std::uint32_t u, std::uint32_t v) const;

private:
    std::uint32_t nodes_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<std::uint32_t> adj_;
};

} // namespace sban
