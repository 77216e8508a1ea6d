#include "sban/search.hpp"

#include <algorithm>
#include <filesystem>
#include <stdexcept>
#include <string>

#include "sban/json_io.hpp"
#include "sban/parallel.hpp"

namespace sban {

namespace {

std::vector<UpdateSchedule> all_ordered_partitions(int n) {
    std::vector<std::vector<std::vector<int>>> parts{{{0}}};
    for (int e = 1; e < n; ++e) {
        std::vector<std::vector<std::vector<int>>> next;
        for (const auto& part : parts) {
            for (std::size_t pos = 0; pos <= part.size(); ++pos) {
                auto grown = part;
                grown.insert(grown.begin() + static_cast<std::ptrdiff_t>(pos), {e});
                next.push_back(std::move(grown));
            }
            for (std::size_t pos = 0; pos < part.size(); ++pos) {
                auto grown = part;
                grown[pos].push_back(e);
                next.push_back(std::move(grown));
            }
        }
        parts = std::move(next);
    }
    std::vector<UpdateSchedule> out;
    out.reserve(parts.size());
    for (auto& part : parts) out.emplace_back(n, std::move(part));
    return out;
}

// One schedule per relabeling class: blocks of consecutive indices. Sound
// for exhaustive sweeps because the network enumeration is closed under
// permuting automata, and relabeling both the network and the schedule
// preserves every simulation cost.
std::vector<UpdateSchedule> composition_schedules(int n) {
    std::vector<UpdateSchedule> out;
    const std::uint32_t breaks = std::uint32_t{1} << (n - 1);
    for (std::uint32_t mask = 0; mask < breaks; ++mask) {
        std::vector<std::vector<int>> blocks(1);
        for (int i = 0; i < n; ++i) {
            blocks.back().push_back(i);
            if (i + 1 < n && ((mask >> i) & 1)) blocks.emplace_back();
        }
        out.emplace_back(n, std::move(blocks));
    }
    return out;
}

// Strict "is a a better worst-case witness than b": larger kappa first, then
// smaller serialization so the reduction is a total order independent of
// visit order.
bool better_witness(int ka, const ScheduledNetwork& a, int kb, const ScheduledNetwork& b) {
    if (ka != kb) return ka > kb;
    if (a.network.table() != b.network.table()) return a.network.table() < b.network.table();
    return a.schedule.blocks() < b.schedule.blocks();
}

struct LocalState {
    int worst_exact = -1;
    std::optional<ScheduledNetwork> witness;
    std::optional<GeneratorSpec> witness_spec;
    std::uint64_t inexact_count = 0;
    int unresolved_upper_max = -1;
    std::vector<SearchViolation> violations;
    std::uint64_t budget_spent = 0;
};

void merge_into(LocalState& acc, LocalState&& part) {
    if (part.worst_exact >= 0 &&
        (acc.worst_exact < 0 || better_witness(part.worst_exact, *part.witness,
                                               acc.worst_exact, *acc.witness))) {
        acc.worst_exact = part.worst_exact;
        acc.witness = std::move(part.witness);
        acc.witness_spec = std::move(part.witness_spec);
    }
    acc.inexact_count += part.inexact_count;
    acc.unresolved_upper_max = std::max(acc.unresolved_upper_max, part.unresolved_upper_max);
    acc.budget_spent += part.budget_spent;
    acc.violations.insert(acc.violations.end(),
                          std::make_move_iterator(part.violations.begin()),
                          std::make_move_iterator(part.violations.end()));
}

std::string conjecture_status(const SearchReport& r) {
    if (!r.violations.empty()) return "violated";
    const int floor_half = r.n / 2;
    if (r.unresolved_upper_max > floor_half) return "undecided-due-to-bounds";
    return "respected";
}

} // namespace

SearchReport search_worst_kappa(const SearchOptions& opt) {
    if (opt.n < 1 || opt.n > max_automata)
        throw domain_error("search size " + std::to_string(opt.n) + " out of range");
    if (opt.strategy != "exhaustive" && opt.strategy != "random")
        throw domain_error("unknown strategy '" + opt.strategy +
                           "'; expected exhaustive or random");
    if (opt.n > opt.max_n)
        throw resource_error("search at n = " + std::to_string(opt.n) +
                             " exceeds the graph cap of " + std::to_string(opt.max_n));

    std::vector<UpdateSchedule> scheds;
    std::uint64_t nets_total = 0;
    std::uint64_t total = 0;
    std::uint64_t swap_extra = 0;
    const bool exhaustive = opt.strategy == "exhaustive";
    if (exhaustive) {
        // 2^(n * 2^n) networks; beyond n = 3 the space dwarfs any budget.
        if (opt.n > 3)
            throw resource_error("exhaustive search needs 2^(n*2^n) networks; at n = " +
                                 std::to_string(opt.n) + " that is out of reach, use random");
        scheds = opt.collapse_schedules ? composition_schedules(opt.n)
                                        : all_ordered_partitions(opt.n);
        nets_total = std::uint64_t{1} << (opt.n * (1 << opt.n));
        total = nets_total * scheds.size();
    } else {
        swap_extra = (opt.include_swap && opt.n >= 2) ? 1 : 0;
        total = opt.samples + swap_extra;
    }
    if (total == 0) throw domain_error("search over zero instances");

    SearchReport rep;
    rep.n = opt.n;
    rep.strategy = opt.strategy;
    rep.samples = exhaustive ? 0 : opt.samples;
    rep.seed = opt.seed;
    rep.chromatic_budget = opt.chromatic_budget;
    rep.include_swap = !exhaustive && swap_extra == 1;
    rep.stratify_blocks = !exhaustive && opt.stratify_blocks;
    rep.collapse_schedules = exhaustive && opt.collapse_schedules;
    rep.instances_total = total;
    rep.conjecture = "respected";

    const bool checkpointing = !opt.checkpoint_path.empty();
    if (checkpointing && std::filesystem::exists(opt.checkpoint_path)) {
        SearchReport saved = search_report_from_json(read_json_file(opt.checkpoint_path));
        const bool same_family =
            saved.n == rep.n && saved.strategy == rep.strategy && saved.samples == rep.samples &&
            saved.seed == rep.seed && saved.chromatic_budget == rep.chromatic_budget &&
            saved.include_swap == rep.include_swap &&
            saved.stratify_blocks == rep.stratify_blocks &&
            saved.collapse_schedules == rep.collapse_schedules &&
            saved.instances_total == rep.instances_total;
        if (!same_family)
            throw domain_error("checkpoint '" + opt.checkpoint_path +
                               "' belongs to a different search; refusing to resume");
        rep = std::move(saved);
    }

    auto materialize = [&](std::uint64_t idx) -> std::pair<ScheduledNetwork,
                                                           std::optional<GeneratorSpec>> {
        if (exhaustive) {
            const std::uint64_t net_id = idx / scheds.size();
            const auto sid = static_cast<std::size_t>(idx % scheds.size());
            const Word count = full_mask(opt.n) + 1;
            std::vector<Word> table(count);
            for (Word x = 0; x < count; ++x)
                table[x] = static_cast<Word>(net_id >> (x * opt.n)) & full_mask(opt.n);
            return {{BooleanNetwork(opt.n, std::move(table)), scheds[sid]}, std::nullopt};
        }
        if (swap_extra == 1 && idx == 0)
            return {swap_network(opt.n), GeneratorSpec{"swap", opt.n, 0}};
        const std::uint64_t s = idx - swap_extra;
        const std::uint64_t net_seed = derive_stream(opt.seed, 2 * s).next();
        const std::uint64_t sched_seed = derive_stream(opt.seed, 2 * s + 1).next();
        BooleanNetwork f = random_network(opt.n, net_seed);
        UpdateSchedule w =
            opt.stratify_blocks
                ? random_schedule_with_blocks(opt.n, 1 + static_cast<int>(s % opt.n),
                                              sched_seed)
                : random_schedule(opt.n, sched_seed);
        return {{std::move(f), std::move(w)}, std::nullopt};
    };

    const int floor_half = opt.n / 2;
    const int proven_ceiling = (2 * opt.n + 2) / 3 + 2; // ceil(2n/3) + 2

    std::uint64_t processed_this_call = 0;
    const std::uint64_t batch_size = opt.flush_every == 0 ? 1000 : opt.flush_every;

    while (rep.cursor < total &&
           (opt.instance_limit == 0 || processed_this_call < opt.instance_limit)) {
        std::uint64_t batch = std::min(batch_size, total - rep.cursor);
        if (opt.instance_limit != 0)
            batch = std::min(batch, opt.instance_limit - processed_this_call);

        const int workers = resolve_threads(opt.threads);
        std::vector<LocalState> locals(static_cast<std::size_t>(workers));
        parallel_chunks(rep.cursor, rep.cursor + batch, workers,
                        [&](std::uint64_t lo, std::uint64_t hi, std::size_t c) {
                            LocalState& local = locals[c];
                            for (std::uint64_t idx = lo; idx < hi; ++idx) {
                                auto [inst, spec] = materialize(idx);
                                KappaResult kr =
                                    kappa(inst.network, inst.schedule, opt.chromatic_budget,
                                          opt.max_n, 1, false);
                                local.budget_spent += kr.chromatic.budget_used;
                                if (!kr.exact) {
                                    ++local.inexact_count;
                                    local.unresolved_upper_max =
                                        std::max(local.unresolved_upper_max, kr.upper);
                                    continue;
                                }
                                if (kr.upper > proven_ceiling)
                                    throw std::logic_error(
                                        "kappa " + std::to_string(kr.upper) +
                                        " exceeds the proven ceiling " +
                                        std::to_string(proven_ceiling) + " at n = " +
                                        std::to_string(opt.n) + "; this is a bug");
                                if (kr.upper > floor_half)
                                    local.violations.push_back({idx, kr.upper, inst});
                                if (local.worst_exact < 0 ||
                                    better_witness(kr.upper, inst, local.worst_exact,
                                                   *local.witness)) {
                                    local.worst_exact = kr.upper;
                                    local.witness = std::move(inst);
                                    local.witness_spec = std::move(spec);
                                }
                            }
                        });

        LocalState merged;
        for (auto& l : locals) merge_into(merged, std::move(l));

        if (merged.worst_exact >= 0 &&
            (rep.worst_exact < 0 || better_witness(merged.worst_exact, *merged.witness,
                                                   rep.worst_exact, *rep.witness))) {
            rep.worst_exact = merged.worst_exact;
            rep.witness = std::move(merged.witness);
            rep.witness_spec = std::move(merged.witness_spec);
        }
        rep.inexact_count += merged.inexact_count;
        rep.unresolved_upper_max =
            std::max(rep.unresolved_upper_max, merged.unresolved_upper_max);
        rep.budget_spent += merged.budget_spent;
        rep.violations.insert(rep.violations.end(),
                              std::make_move_iterator(merged.violations.begin()),
                              std::make_move_iterator(merged.violations.end()));
        std::sort(rep.violations.begin(), rep.violations.end(),
                  [](const SearchViolation& a, const SearchViolation& b) {
                      return a.instance < b.instance;
                  });

        rep.cursor += batch;
        processed_this_call += batch;
        rep.completed = rep.cursor == total;
        rep.conjecture = conjecture_status(rep);
        if (checkpointing) write_json_file(opt.checkpoint_path, search_report_to_json(rep));
    }

    rep.completed = rep.cursor == total;
    rep.conjecture = conjecture_status(rep);
    return rep;
}

} // namespace sban
