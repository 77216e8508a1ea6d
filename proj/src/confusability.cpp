#include "sban/confusability.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sban/parallel.hpp"

namespace sban {

StepInterval cc_steps(const BooleanNetwork& f, const UpdateSchedule& w, Word x, Word x2) {
    if (f.size() != w.size())
        throw domain_error("network and schedule disagree on size");
    if (x > f.mask() || x2 > f.mask())
        throw domain_error("configuration out of range for this network");
    const int p = w.block_count();
    StepInterval iv = StepInterval::empty_interval();
    int count = 0;
    for (int i = 0; i <= p; ++i) {
        if (partial_parallel_update(f, w, x, i) == partial_parallel_update(f, w, x2, i)) {
            if (count == 0) iv.lo = i;
            iv.hi = i;
            ++count;
        }
    }
    // The confusable step set is provably contiguous; a gap would mean the
    // update semantics are broken, so fail hard instead of returning nonsense.
    if (count != iv.length())
        throw std::logic_error("confusable step set has a gap for pair (" +
                               std::to_string(x) + ", " + std::to_string(x2) + ")");
    return iv;
}

namespace {

void collect_step_edges(const BooleanNetwork& f, const UpdateSchedule& w, int step,
                        std::vector<Graph::Edge>& out) {
    const Word count = f.state_count();
    // Sort configurations by their partial update, then by image inside each
    // bucket: edges join bucket members whose images differ.
    struct Row {
        Word value;
        Word image;
        Word x;
    };
    std::vector<Row> rows;
    rows.reserve(count);
    for (Word x = 0; x < count; ++x)
        rows.push_back({partial_parallel_update(f, w, x, step), f.apply(x), x});
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.value != b.value) return a.value < b.value;
        if (a.image != b.image) return a.image < b.image;
        return a.x < b.x;
    });

    std::size_t lo = 0;
    while (lo < rows.size()) {
        std::size_t hi = lo;
        while (hi < rows.size() && rows[hi].value == rows[lo].value) ++hi;
        // Image groups inside the bucket [lo, hi): all cross-group pairs.
        std::size_t g1 = lo;
        while (g1 < hi) {
            std::size_t g1end = g1;
            while (g1end < hi && rows[g1end].image == rows[g1].image) ++g1end;
            for (std::size_t a = g1; a < g1end; ++a)
                for (std::size_t b = g1end; b < hi; ++b) {
                    Word u = rows[a].x, v = rows[b].x;
                    out.emplace_back(std::min(u, v), std::max(u, v));
                }
            g1 = g1end;
        }
        lo = hi;
    }
}

} // namespace

ConfusabilityGraph build_necc_graph(const BooleanNetwork& f, const UpdateSchedule& w,
                                    bool with_intervals, int max_n, int threads) {
    if (f.size() != w.size())
        throw domain_error("network and schedule disagree on size");
    if (f.size() > max_n)
        throw resource_error("confusability graph on " + std::to_string(f.size()) +
                             " automata exceeds the cap of " + std::to_string(max_n) +
                             " (2^n nodes); raise the cap to proceed");

    const int p = w.block_count();
    // Steps 0 and p cannot witness an edge: updating zero blocks separates
    // every distinct pair, and updating all p blocks merges only pairs with
    // equal images, which the different-image condition excludes.
    std::vector<std::vector<Graph::Edge>> per_step(
        static_cast<std::size_t>(std::max(0, p - 1)));
    parallel_chunks(1, static_cast<std::uint64_t>(p), threads,
                    [&](std::uint64_t lo, std::uint64_t hi, std::size_t) {
                        for (std::uint64_t i = lo; i < hi; ++i)
                            collect_step_edges(f, w, static_cast<int>(i),
                                               per_step[static_cast<std::size_t>(i - 1)]);
                    });

    std::size_t total = 0;
    for (const auto& v : per_step) total += v.size();
    std::vector<Graph::Edge> edges;
    edges.reserve(total);
    for (const auto& v : per_step) edges.insert(edges.end(), v.begin(), v.end());

    ConfusabilityGraph out;
    out.n = f.size();
    out.p = p;
    out.graph = Graph(f.state_count(), std::move(edges));
    if (with_intervals) {
        out.intervals.reserve(out.graph.edge_count());
        for (const auto& [u, v] : out.graph.edges())
            out.intervals.push_back(cc_steps(f, w, u, v));
    }
    return out;
}

ImageQuotientGraph quotient_by_image(const BooleanNetwork& f, const ConfusabilityGraph& necc) {
    if (necc.graph.node_count() != f.state_count())
        throw domain_error("confusability graph was not built from this network");

    ImageQuotientGraph out;
    out.n = f.size();

    const Word count = f.state_count();
    std::vector<Word> images;
    images.reserve(count);
    for (Word x = 0; x < count; ++x) images.push_back(f.apply(x));
    std::vector<Word> sorted = images;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    out.vertices = sorted;

    std::vector<std::uint32_t> index_of(count, 0);
    out.classes.assign(sorted.size(), {});
    for (Word x = 0; x < count; ++x) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), images[x]);
        auto idx = static_cast<std::uint32_t>(it - sorted.begin());
        index_of[x] = idx;
        out.classes[idx].push_back(x);
    }

    std::vector<Graph::Edge> qedges;
    qedges.reserve(necc.graph.edge_count());
    for (const auto& [u, v] : necc.graph.edges())
        qedges.emplace_back(index_of[u], index_of[v]);
    out.graph = Graph(static_cast<std::uint32_t>(sorted.size()), std::move(qedges));
    return out;
}

ImageQuotientGraph build_inecc_graph(const BooleanNetwork& f, const UpdateSchedule& w,
                                     int max_n, int threads) {
    return quotient_by_image(f, build_necc_graph(f, w, false, max_n, threads));
}

UpdateSchedule sequentialize(const UpdateSchedule& w) {
    std::vector<std::vector<int>> singles;
    singles.reserve(static_cast<std::size_t>(w.size()));
    for (const auto& blk : w.blocks())
        for (int i : blk) singles.push_back({i});
    return UpdateSchedule(w.size(), std::move(singles));
}

} // namespace sban
