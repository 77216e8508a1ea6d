#pragma once

// Constructive simulation: given a proper coloring of the confusability
// graph with 2^k classes, build an (n+k)-automaton network whose
// block-sequential run reproduces one parallel step of the original network
// on the first n coordinates. The auxiliary automata snapshot the color of
// the configuration before the original blocks start firing, which is
// exactly the information the partial updates destroy.

#include <cstdint>
#include <optional>

#include "sban/coloring.hpp"
#include "sban/confusability.hpp"
#include "sban/core.hpp"

namespace sban {

struct SynthesisResult {
    BooleanNetwork network;   // n+k automata
    UpdateSchedule schedule;  // ({n},...,{n+k-1}, W_0,...,W_{p-1})
    Embedding embedding;      // identity placement of the originals
    int k = 0;
    Coloring coloring;        // the coloring the construction used
};

// Builds the simulator for (f, w) from a proper coloring of the
// confusability graph. Throws invalid_coloring_error when the coloring makes
// two configurations with different images indistinguishable mid-run.
SynthesisResult synthesize(const BooleanNetwork& f, const UpdateSchedule& w,
                           const Coloring& coloring, int threads = 1);

// Reads a proper confusability-graph coloring out of any correct simulator:
// the color of x is the auxiliary part of the simulator's full sweep started
// from x embedded with zeroed auxiliary coordinates. Requires that wp extend
// w through h and that (fp, wp) simulate one parallel step of f; both are
// checked.
Coloring extract_coloring(const BooleanNetwork& fp, const UpdateSchedule& wp,
                          const Embedding& h, const BooleanNetwork& f,
                          const UpdateSchedule& w, int threads = 1);

struct KappaResult {
    int lower = 0;
    int upper = 0;
    bool exact = false;
    ChromaticResult chromatic;
    std::optional<SynthesisResult> witness; // realizes the upper bound
};

struct VerificationReport {
    bool pass = false;
    bool extension_ok = false;
    bool simulation_ok = false;
    std::optional<Word> counterexample; // smallest failing simulator state
    std::uint64_t states_checked = 0;
};

// Re-checks a simulator bundle against the SBAN it claims to simulate: the
// schedule must extend w through the bundle's embedding, and a full sweep
// must reproduce one parallel step of f on every simulator state.
VerificationReport verify_bundle(const SynthesisResult& bundle, const BooleanNetwork& f,
                                 const UpdateSchedule& w, int threads = 1);

// Minimum number of auxiliary automata needed to simulate one parallel step
// of f while respecting the relative update order w: ceil(log2 chi) of the
// confusability graph. Exact when the chromatic search completes within
// budget, or when rounding collapses the chromatic bounds anyway.
KappaResult kappa(const BooleanNetwork& f, const UpdateSchedule& w,
                  std::uint64_t budget = default_chromatic_budget,
                  int max_n = default_graph_cap, int threads = 1,
                  bool with_witness = true);

} // namespace sban
