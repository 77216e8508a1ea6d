#pragma once

// Confusability machinery. Two configurations are confusable when updating
// the first i blocks of the schedule (simultaneously) makes them coincide,
// for some step i; the confusability graph joins confusable pairs that also
// have different images under F. Its chromatic number is what prices the
// auxiliary automata needed to recover parallel behavior from a
// block-sequential run.

#include <cstdint>
#include <vector>

#include "sban/core.hpp"
#include "sban/graph.hpp"

namespace sban {

inline constexpr int default_graph_cap = 14;

// The steps at which two configurations are confusable. Non-empty sets are
// always a contiguous range of steps, which is what this type stores.
struct StepInterval {
    int lo = 0;
    int hi = -1;

    static StepInterval empty_interval() { return {0, -1}; }

    bool empty() const { return hi < lo; }
    bool contains(int i) const { return lo <= i && i <= hi; }
    int length() const { return empty() ? 0 : hi - lo + 1; }

    bool operator==(const StepInterval& other) const {
        if (empty() && other.empty()) return true;
        return lo == other.lo && hi == other.hi;
    }
};

// Confusability graph of an SBAN: one node per configuration, an edge for
// every confusable pair with distinct images. Edge intervals are aligned
// with graph.edges() and present only when requested at build time.
struct ConfusabilityGraph {
    int n = 0;
    int p = 0;
    Graph graph{0, {}};
    std::vector<StepInterval> intervals;

    bool has_intervals() const { return !intervals.empty() || graph.edge_count() == 0; }
};

// Quotient of the confusability graph identifying configurations with equal
// images. vertices holds the distinct images ascending; classes[i] lists the
// preimages of vertices[i]; graph nodes are indices into vertices.
struct ImageQuotientGraph {
    int n = 0;
    std::vector<Word> vertices;
    std::vector<std::vector<Word>> classes;
    Graph graph{0, {}};
};

// Exact set {i in [0, p] : updating the first i blocks sends x and x2 to the
// same configuration}, as an interval. Steps 0 and p are included: step 0
// holds exactly when x = x2 and step p exactly when F(x) = F(x2).
StepInterval cc_steps(const BooleanNetwork& f, const UpdateSchedule& w, Word x, Word x2);

// Different images under f.
inline bool is_nec(const BooleanNetwork& f, Word x, Word x2) {
    return f.apply(x) != f.apply(x2);
}

ConfusabilityGraph build_necc_graph(const BooleanNetwork& f, const UpdateSchedule& w,
                                    bool with_intervals = false, int max_n = default_graph_cap,
                                    int threads = 1);

ImageQuotientGraph build_inecc_graph(const BooleanNetwork& f, const UpdateSchedule& w,
                                     int max_n = default_graph_cap, int threads = 1);

// Quotient an already-built confusability graph by image equality.
ImageQuotientGraph quotient_by_image(const BooleanNetwork& f, const ConfusabilityGraph& necc);

// Splits every block into singletons, ascending inside each block.
UpdateSchedule sequentialize(const UpdateSchedule& w);

} // namespace sban
