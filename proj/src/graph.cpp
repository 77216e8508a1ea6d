#include "sban/graph.hpp"

#include <algorithm>
#include <string>

namespace sban {

Graph::Graph(std::uint32_t nodes, std::vector<Edge> edges)
    : nodes_(nodes), edges_(std::move(edges)) {
    for (auto& [u, v] : edges_) {
        if (u == v)
            throw domain_error("self-loop on node " + std::to_string(u));
        if (u >= nodes_ || v >= nodes_)
            throw domain_error("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                               ") leaves the node range [0, " + std::to_string(nodes_) + ")");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    std::vector<std::uint32_t> deg(nodes_, 0);
    for (const auto& [u, v] : edges_) {
        ++deg[u];
        ++deg[v];
    }
    offsets_.assign(nodes_ + 1, 0);
    for (std::uint32_t u = 0; u < nodes_; ++u) offsets_[u + 1] = offsets_[u] + deg[u];
    adj_.resize(offsets_[nodes_]);
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const auto& [u, v] : edges_) {
        adj_[cursor[u]++] = v;
        adj_[cursor[v]++] = u;
    }
    // has_edge binary-searches neighbor lists, so keep them sorted.
    for (std::uint32_t u = 0; u < nodes_; ++u)
        std::sort(adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[u]),
                  adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[u + 1]));
}

bool Graph::has_edge(std::uint32_t u, std::uint32_t v) const {
    if (u >= nodes_ || v >= nodes_ || u == v) return false;
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t Graph::edge_index(std::uint32_t u, std::uint32_t v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || *it != Edge{u, v}) return npos;
    return static_cast<std::size_t>(it - edges_.begin());
}

} // namespace sban
