#include "sban/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sban {

Coloring make_coloring(std::vector<int> colors) {
    Coloring c;
    c.colors = std::move(colors);
    if (c.colors.empty()) return c;
    int max_id = -1;
    for (std::size_t v = 0; v < c.colors.size(); ++v) {
        if (c.colors[v] < 0)
            throw domain_error("node " + std::to_string(v) + " has negative color");
        max_id = std::max(max_id, c.colors[v]);
    }
    std::vector<char> used(static_cast<std::size_t>(max_id) + 1, 0);
    for (int id : c.colors) used[static_cast<std::size_t>(id)] = 1;
    for (int id = 0; id <= max_id; ++id)
        if (!used[static_cast<std::size_t>(id)])
            throw domain_error("color ids are not dense: " + std::to_string(id) + " is unused");
    c.count = max_id + 1;
    return c;
}

Coloring normalize_coloring(const std::vector<int>& raw) {
    Coloring c;
    c.colors.assign(raw.size(), -1);
    std::vector<int> remap;
    for (std::size_t v = 0; v < raw.size(); ++v) {
        if (raw[v] < 0)
            throw domain_error("node " + std::to_string(v) + " has negative color");
        const auto id = static_cast<std::size_t>(raw[v]);
        if (id >= remap.size()) remap.resize(id + 1, -1);
        if (remap[id] == -1) remap[id] = c.count++;
        c.colors[v] = remap[id];
    }
    return c;
}

bool validate_coloring(const Graph& g, const Coloring& c) {
    if (c.colors.size() != g.node_count())
        throw domain_error("coloring covers " + std::to_string(c.colors.size()) +
                           " nodes but the graph has " + std::to_string(g.node_count()));
    for (std::size_t v = 0; v < c.colors.size(); ++v)
        if (c.colors[v] < 0 || c.colors[v] >= c.count)
            throw domain_error("node " + std::to_string(v) + " has color " +
                               std::to_string(c.colors[v]) + ", outside [0, " +
                               std::to_string(c.count) + ")");
    for (const auto& [u, v] : g.edges())
        if (c.colors[u] == c.colors[v]) return false;
    return true;
}

namespace {

// Degree-descending order with ascending node id as the tie-break.
std::vector<std::uint32_t> degree_order(const Graph& g) {
    std::vector<std::uint32_t> order(g.node_count());
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return g.degree(a) > g.degree(b);
    });
    return order;
}

std::vector<std::uint32_t> greedy_clique(const Graph& g) {
    if (g.node_count() == 0) return {};
    std::vector<std::uint32_t> clique;
    for (std::uint32_t v : degree_order(g)) {
        bool compatible = true;
        for (std::uint32_t u : clique)
            if (!g.has_edge(u, v)) {
                compatible = false;
                break;
            }
        if (compatible) clique.push_back(v);
    }
    std::sort(clique.begin(), clique.end());
    return clique;
}

enum class DecideOutcome { sat, unsat, out_of_budget };

// Decides k-colorability. One instance per k; all state is rebuilt fresh.
class KColorSearch {
public:
    KColorSearch(const Graph& g, int k, std::span<const std::uint32_t> clique,
                 std::uint64_t budget)
        : g_(g), k_(k), budget_(budget) {
        const std::size_t nodes = g.node_count();
        const std::size_t cells = nodes * static_cast<std::size_t>(k_);
        if (k_ > 0 && cells / static_cast<std::size_t>(k_) != nodes)
            throw resource_error("chromatic search table overflows");
        if (cells > (std::size_t{1} << 28))
            throw resource_error("chromatic search table needs " + std::to_string(cells) +
                                 " cells; reduce the graph or the color bound");
        color_.assign(nodes, -1);
        adj_count_.assign(cells, 0);
        sat_.assign(nodes, 0);
        color_use_.assign(static_cast<std::size_t>(k_), 0);
        uncolored_.resize(nodes);
        std::iota(uncolored_.begin(), uncolored_.end(), 0u);
        // Pre-color the clique with distinct colors; any proper k-coloring
        // can be renamed to agree, so this loses no solutions.
        for (std::size_t i = 0; i < clique.size(); ++i) {
            const std::uint32_t v = clique[i];
            uncolored_.erase(std::find(uncolored_.begin(), uncolored_.end(), v));
            assign(v, static_cast<int>(i));
        }
    }

    DecideOutcome run() {
        DecideOutcome r = descend();
        return r;
    }

    std::uint64_t expansions() const { return expansions_; }

    std::vector<int> take_colors() { return std::move(color_); }

private:
    void assign(std::uint32_t v, int c) {
        color_[v] = c;
        if (color_use_[static_cast<std::size_t>(c)]++ == 0) ++used_colors_;
        for (std::uint32_t u : g_.neighbors(v)) {
            if (color_[u] != -1) continue;
            auto& cell = adj_count_[cell_index(u, c)];
            if (cell++ == 0) ++sat_[u];
        }
    }

    void unassign(std::uint32_t v) {
        const int c = color_[v];
        color_[v] = -1;
        if (--color_use_[static_cast<std::size_t>(c)] == 0) --used_colors_;
        for (std::uint32_t u : g_.neighbors(v)) {
            if (color_[u] != -1) continue;
            auto& cell = adj_count_[cell_index(u, c)];
            if (--cell == 0) --sat_[u];
        }
    }

    std::size_t cell_index(std::uint32_t v, int c) const {
        return static_cast<std::size_t>(v) * static_cast<std::size_t>(k_) +
               static_cast<std::size_t>(c);
    }

    // Most saturated first, then highest degree, then smallest id.
    std::size_t select_position() const {
        std::size_t best = 0;
        for (std::size_t i = 1; i < uncolored_.size(); ++i) {
            const std::uint32_t v = uncolored_[i];
            const std::uint32_t b = uncolored_[best];
            if (sat_[v] != sat_[b]) {
                if (sat_[v] > sat_[b]) best = i;
            } else if (g_.degree(v) != g_.degree(b)) {
                if (g_.degree(v) > g_.degree(b)) best = i;
            } else if (v < b) {
                best = i;
            }
        }
        return best;
    }

    DecideOutcome descend() {
        if (++expansions_ > budget_) return DecideOutcome::out_of_budget;
        if (uncolored_.empty()) return DecideOutcome::sat;

        const std::size_t pos = select_position();
        const std::uint32_t v = uncolored_[pos];
        uncolored_[pos] = uncolored_.back();
        uncolored_.pop_back();

        // Existing colors plus at most one fresh color: trying a second
        // fresh color would only rename the first attempt.
        const int limit = std::min(used_colors_ + 1, k_);
        for (int c = 0; c < limit; ++c) {
            if (adj_count_[cell_index(v, c)] != 0) continue;
            assign(v, c);
            DecideOutcome r = descend();
            if (r != DecideOutcome::unsat) {
                if (r == DecideOutcome::out_of_budget) unassign(v);
                if (r == DecideOutcome::sat) return r; // keep assignment for the witness
                uncolored_.push_back(v);
                return r;
            }
            unassign(v);
        }
        uncolored_.push_back(v);
        return DecideOutcome::unsat;
    }

    const Graph& g_;
    int k_;
    std::uint64_t budget_;
    std::uint64_t expansions_ = 0;
    int used_colors_ = 0;
    std::vector<int> color_;
    std::vector<std::uint16_t> adj_count_;
    std::vector<std::uint32_t> sat_;
    std::vector<std::uint32_t> color_use_;
    std::vector<std::uint32_t> uncolored_;
};

} // namespace

Coloring greedy_color_by_degree(const Graph& g) {
    Coloring out;
    out.colors.assign(g.node_count(), -1);
    std::vector<int> taken; // scratch: taken[c] == stamp means c is blocked
    int stamp = 0;
    for (std::uint32_t v : degree_order(g)) {
        ++stamp;
        int needed = 0;
        for (std::uint32_t u : g.neighbors(v)) {
            const int cu = out.colors[u];
            if (cu < 0) continue;
            if (static_cast<std::size_t>(cu) >= taken.size()) taken.resize(cu + 1, 0);
            taken[static_cast<std::size_t>(cu)] = stamp;
        }
        while (static_cast<std::size_t>(needed) < taken.size() &&
               taken[static_cast<std::size_t>(needed)] == stamp)
            ++needed;
        out.colors[v] = needed;
        out.count = std::max(out.count, needed + 1);
    }
    return out;
}

ChromaticResult exact_chromatic_number(const Graph& g, std::uint64_t budget,
                                       std::span<const std::uint32_t> seed_clique) {
    ChromaticResult res;
    if (g.node_count() == 0) {
        res.exact = true;
        return res;
    }

    if (seed_clique.empty()) {
        res.clique = greedy_clique(g);
    } else {
        res.clique.assign(seed_clique.begin(), seed_clique.end());
        std::sort(res.clique.begin(), res.clique.end());
        for (std::size_t a = 0; a < res.clique.size(); ++a) {
            if (res.clique[a] >= g.node_count())
                throw domain_error("seed clique node " + std::to_string(res.clique[a]) +
                                   " is not in the graph");
            for (std::size_t b = a + 1; b < res.clique.size(); ++b)
                if (!g.has_edge(res.clique[a], res.clique[b]))
                    throw domain_error("seed clique is not a clique: (" +
                                       std::to_string(res.clique[a]) + ", " +
                                       std::to_string(res.clique[b]) + ") is not an edge");
        }
    }

    res.witness = greedy_color_by_degree(g);
    res.upper = res.witness.count;
    res.lower = std::max<int>(1, static_cast<int>(res.clique.size()));

    while (res.lower < res.upper) {
        const int k = res.lower;
        KColorSearch search(g, k, res.clique, budget - res.budget_used);
        const DecideOutcome outcome = search.run();
        res.budget_used += search.expansions();
        if (outcome == DecideOutcome::out_of_budget) {
            res.exact = false;
            return res;
        }
        if (outcome == DecideOutcome::sat) {
            res.witness = normalize_coloring(search.take_colors());
            res.upper = k;
            break;
        }
        res.lower = k + 1; // k colors proven impossible
    }
    res.exact = true;
    res.lower = res.upper;
    return res;
}

CliqueResult max_clique_necc(const BooleanNetwork& f, const UpdateSchedule& w, const Graph& g) {
    if (f.size() != w.size())
        throw domain_error("network and schedule disagree on size");
    if (g.node_count() != f.state_count())
        throw domain_error("graph was not built from this network: " +
                           std::to_string(g.node_count()) + " nodes vs " +
                           std::to_string(f.state_count()) + " configurations");

    const Word count = f.state_count();
    const int p = w.block_count();
    CliqueResult best;
    best.size = 1;
    best.members = {0};

    struct Row {
        Word value;
        Word image;
        Word x;
    };
    std::vector<Row> rows(count);
    for (int step = 1; step < p; ++step) {
        for (Word x = 0; x < count; ++x)
            rows[x] = {partial_parallel_update(f, w, x, step), f.apply(x), x};
        std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
            if (a.value != b.value) return a.value < b.value;
            if (a.image != b.image) return a.image < b.image;
            return a.x < b.x;
        });
        std::size_t lo = 0;
        while (lo < rows.size()) {
            std::size_t hi = lo;
            std::vector<std::uint32_t> reps;
            Word last_image = 0;
            while (hi < rows.size() && rows[hi].value == rows[lo].value) {
                if (reps.empty() || rows[hi].image != last_image) {
                    reps.push_back(rows[hi].x);
                    last_image = rows[hi].image;
                }
                ++hi;
            }
            if (static_cast<int>(reps.size()) > best.size) {
                best.size = static_cast<int>(reps.size());
                std::sort(reps.begin(), reps.end());
                best.members = std::move(reps);
            }
            lo = hi;
        }
    }

    // The bucket argument proves these are pairwise confusable with distinct
    // images; disagreement with the edge list would be an internal bug.
    for (std::size_t a = 0; a < best.members.size(); ++a)
        for (std::size_t b = a + 1; b < best.members.size(); ++b)
            if (!g.has_edge(best.members[a], best.members[b]))
                throw std::logic_error("clique witness is not a clique in the built graph");
    return best;
}

namespace {

// Fixed-width bitset rows for the clique search.
class BitMatrix {
public:
    BitMatrix(std::uint32_t nodes)
        : words_((nodes + 63) / 64), bits_(static_cast<std::size_t>(nodes) * words_, 0) {}

    void set(std::uint32_t row, std::uint32_t col) {
        bits_[row * words_ + col / 64] |= std::uint64_t{1} << (col % 64);
    }
    const std::uint64_t* row(std::uint32_t r) const { return bits_.data() + r * words_; }
    std::size_t words() const { return words_; }

private:
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

int popcount_and(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    int t = 0;
    for (std::size_t i = 0; i < words; ++i) t += __builtin_popcountll(a[i] & b[i]);
    return t;
}

class CliqueSearch {
public:
    explicit CliqueSearch(const Graph& g)
        : g_(g), adj_(g.node_count()), words_(adj_.words()) {
        for (const auto& [u, v] : g.edges()) {
            adj_.set(u, v);
            adj_.set(v, u);
        }
    }

    CliqueResult run() {
        CliqueResult best;
        if (g_.node_count() == 0) return best;
        std::vector<std::uint64_t> p(words_, 0), x(words_, 0);
        for (std::uint32_t v = 0; v < g_.node_count(); ++v)
            p[v / 64] |= std::uint64_t{1} << (v % 64);
        std::vector<std::uint32_t> r;
        expand(r, p, x, best);
        std::sort(best.members.begin(), best.members.end());
        return best;
    }

private:
    void expand(std::vector<std::uint32_t>& r, std::vector<std::uint64_t>& p,
                std::vector<std::uint64_t>& x, CliqueResult& best) {
        int pcount = 0;
        for (std::size_t i = 0; i < words_; ++i) pcount += __builtin_popcountll(p[i]);
        if (static_cast<int>(r.size()) + pcount <= best.size) return;
        if (pcount == 0) {
            bool maximal = true;
            for (std::size_t i = 0; i < words_; ++i)
                if (x[i]) {
                    maximal = false;
                    break;
                }
            if (maximal && static_cast<int>(r.size()) > best.size) {
                best.size = static_cast<int>(r.size());
                best.members = r;
            }
            return;
        }

        // Pivot on the vertex covering most of P; only its non-neighbors in P
        // need to be branched on.
        std::uint32_t pivot = 0;
        int pivot_cover = -1;
        for (std::uint32_t v = 0; v < g_.node_count(); ++v) {
            const bool in_p = (p[v / 64] >> (v % 64)) & 1;
            const bool in_x = (x[v / 64] >> (v % 64)) & 1;
            if (!in_p && !in_x) continue;
            const int cover = popcount_and(p.data(), adj_.row(v), words_);
            if (cover > pivot_cover) {
                pivot_cover = cover;
                pivot = v;
            }
        }

        std::vector<std::uint32_t> candidates;
        for (std::uint32_t v = 0; v < g_.node_count(); ++v) {
            const bool in_p = (p[v / 64] >> (v % 64)) & 1;
            if (!in_p) continue;
            const bool piv_adj = (adj_.row(pivot)[v / 64] >> (v % 64)) & 1;
            if (!piv_adj) candidates.push_back(v);
        }

        std::vector<std::uint64_t> np(words_), nx(words_);
        for (std::uint32_t v : candidates) {
            const std::uint64_t* nv = adj_.row(v);
            for (std::size_t i = 0; i < words_; ++i) {
                np[i] = p[i] & nv[i];
                nx[i] = x[i] & nv[i];
            }
            r.push_back(v);
            expand(r, np, nx, best);
            r.pop_back();
            p[v / 64] &= ~(std::uint64_t{1} << (v % 64));
            x[v / 64] |= std::uint64_t{1} << (v % 64);
        }
    }

    const Graph& g_;
    BitMatrix adj_;
    std::size_t words_;
};

} // namespace

CliqueResult max_clique_generic(const Graph& g, std::uint32_t node_cap) {
    if (g.node_count() > node_cap)
        throw resource_error("clique search on " + std::to_string(g.node_count()) +
                             " nodes exceeds the cap of " + std::to_string(node_cap));
    return CliqueSearch(g).run();
}

} // namespace sban
