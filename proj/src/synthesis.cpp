#include "sban/synthesis.hpp"

#include <algorithm>
#include <string>

#include "sban/parallel.hpp"

namespace sban {

namespace {

constexpr Word no_image = ~Word{0};

UpdateSchedule extended_schedule(const UpdateSchedule& w, int n, int k) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(static_cast<std::size_t>(k) + w.blocks().size());
    for (int t = 0; t < k; ++t) blocks.push_back({n + t});
    for (const auto& blk : w.blocks()) blocks.push_back(blk);
    return UpdateSchedule(n + k, std::move(blocks));
}

} // namespace

SynthesisResult synthesize(const BooleanNetwork& f, const UpdateSchedule& w,
                           const Coloring& coloring, int threads) {
    if (f.size() != w.size())
        throw domain_error("network and schedule disagree on size");
    const int n = f.size();
    const Word count = f.state_count();
    if (coloring.colors.size() != count)
        throw domain_error("coloring covers " + std::to_string(coloring.colors.size()) +
                           " configurations, expected " + std::to_string(count));
    if (coloring.count < 1)
        throw domain_error("coloring uses no colors");
    for (Word x = 0; x < count; ++x)
        if (coloring.colors[x] < 0 || coloring.colors[x] >= coloring.count)
            throw domain_error("color of configuration " + std::to_string(x) +
                               " is outside [0, " + std::to_string(coloring.count) + ")");

    const int k = ceil_log2(static_cast<std::uint64_t>(coloring.count));
    const int m = n + k;
    if (m > max_automata)
        throw resource_error("simulator needs " + std::to_string(m) +
                             " automata, limit is " + std::to_string(max_automata));

    const int p = w.block_count();
    const std::uint64_t big_count = std::uint64_t{1} << m;

    // Auxiliary automata at n..n+k-1 copy in the color of the original part.
    std::vector<Word> table(big_count);
    for (std::uint64_t z = 0; z < big_count; ++z) {
        const Word x = static_cast<Word>(z) & f.mask();
        table[z] = static_cast<Word>(coloring.colors[x]) << n;
    }

    // Block j of the original schedule: a run state (x || y) is reachable
    // from any start whose color is y and whose first j blocks update to x.
    // When all such starts share one image z, block j can emit z's bits;
    // two different images would mean the coloring fails to separate a
    // confusable different-image pair, which is exactly an improper coloring
    // of the confusability graph.
    std::vector<Word> image_at(big_count);
    for (int j = 0; j < p; ++j) {
        std::fill(image_at.begin(), image_at.end(), no_image);
        for (Word x = 0; x < count; ++x) {
            const Word key = partial_parallel_update(f, w, x, j) |
                             (static_cast<Word>(coloring.colors[x]) << n);
            const Word image = f.apply(x);
            if (image_at[key] == no_image) {
                image_at[key] = image;
            } else if (image_at[key] != image) {
                Word other = 0;
                for (Word x2 = 0; x2 < x; ++x2)
                    if (coloring.colors[x2] == coloring.colors[x] &&
                        partial_parallel_update(f, w, x2, j) ==
                            partial_parallel_update(f, w, x, j)) {
                        other = x2;
                        break;
                    }
                throw invalid_coloring_error(
                    "coloring is not proper: configurations " + std::to_string(other) +
                    " and " + std::to_string(x) + " share color " +
                    std::to_string(coloring.colors[x]) + " and collide after block " +
                    std::to_string(j) + " but have different images");
            }
        }
        const Word bm = w.block_mask(j);
        parallel_chunks(0, big_count, threads,
                        [&](std::uint64_t lo, std::uint64_t hi, std::size_t) {
                            for (std::uint64_t z = lo; z < hi; ++z) {
                                const Word img = image_at[z];
                                // Unreachable states emit the all-zero block.
                                if (img != no_image) table[z] |= img & bm;
                            }
                        });
    }

    SynthesisResult out{BooleanNetwork(m, std::move(table)), extended_schedule(w, n, k),
                        Embedding::prefix(n, m), k, coloring};
    return out;
}

Coloring extract_coloring(const BooleanNetwork& fp, const UpdateSchedule& wp,
                          const Embedding& h, const BooleanNetwork& f,
                          const UpdateSchedule& w, int threads) {
    if (f.size() != w.size())
        throw domain_error("network and schedule disagree on size");
    if (fp.size() != wp.size())
        throw domain_error("simulator network and schedule disagree on size");
    if (h.domain_size() != f.size() || h.codomain_size() != fp.size())
        throw domain_error("embedding shape does not match the two networks");
    if (!validate_schedule_extension(w, wp, h))
        throw domain_error("simulator schedule does not extend the original relative order");
    if (!check_simulation(fp, wp, h, f, UpdateSchedule::parallel(f.size()), threads))
        throw domain_error("candidate does not simulate a parallel step of the network");

    const int n = f.size();
    const int m = fp.size();

    // Positions of the auxiliary automata, ascending; their values after a
    // full sweep from the zero-padded lift of x are x's color pattern.
    std::vector<int> aux;
    aux.reserve(static_cast<std::size_t>(m - n));
    for (int j = 0; j < m; ++j)
        if (!(h.image_mask() & word_bit(j))) aux.push_back(j);

    const Word count = f.state_count();
    std::vector<int> raw(count);
    for (Word x = 0; x < count; ++x) {
        Word z = 0;
        for (int i = 0; i < n; ++i)
            if (get_bit(x, i)) z |= word_bit(h.image_of(i));
        const Word u = step_scheduled(fp, wp, z);
        int pattern = 0;
        for (std::size_t t = 0; t < aux.size(); ++t)
            if (get_bit(u, aux[t])) pattern |= 1 << t;
        raw[x] = pattern;
    }
    return normalize_coloring(raw);
}

VerificationReport verify_bundle(const SynthesisResult& bundle, const BooleanNetwork& f,
                                 const UpdateSchedule& w, int threads) {
    if (bundle.embedding.domain_size() != f.size() ||
        bundle.embedding.codomain_size() != bundle.network.size())
        throw domain_error("bundle embedding shape does not match the networks");
    VerificationReport rep;
    rep.states_checked = bundle.network.state_count();
    rep.extension_ok = validate_schedule_extension(w, bundle.schedule, bundle.embedding);
    rep.counterexample =
        simulation_counterexample(bundle.network, bundle.schedule, bundle.embedding, f,
                                  UpdateSchedule::parallel(f.size()), threads);
    rep.simulation_ok = !rep.counterexample.has_value();
    rep.pass = rep.extension_ok && rep.simulation_ok;
    return rep;
}

KappaResult kappa(const BooleanNetwork& f, const UpdateSchedule& w, std::uint64_t budget,
                  int max_n, int threads, bool with_witness) {
    KappaResult out;
    ConfusabilityGraph necc = build_necc_graph(f, w, false, max_n, threads);
    CliqueResult clique = max_clique_necc(f, w, necc.graph);
    out.chromatic = exact_chromatic_number(
        necc.graph, budget,
        std::span<const std::uint32_t>(clique.members.data(), clique.members.size()));

    out.lower = ceil_log2(static_cast<std::uint64_t>(out.chromatic.lower));
    out.upper = ceil_log2(static_cast<std::uint64_t>(out.chromatic.upper));
    // Rounding can pin kappa even when chi stayed an interval.
    out.exact = out.chromatic.exact || out.lower == out.upper;
    if (with_witness)
        out.witness = synthesize(f, w, out.chromatic.witness, threads);
    return out;
}

} // namespace sban
