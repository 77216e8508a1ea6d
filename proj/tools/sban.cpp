// Command-line frontend. Subcommands exchange JSON files so they compose:
// gen writes an instance, graph/kappa/synthesize read instances, chromatic
// and clique read either an instance or an emitted graph, verify re-checks a
// simulator bundle against the instance it claims to simulate.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sban/dot.hpp"
#include "sban/json_io.hpp"
#include "sban/parallel.hpp"
#include "sban/search.hpp"

namespace {

using namespace sban;

std::uint64_t default_budget_from_env() {
    const char* raw = std::getenv("SBAN_BUDGET");
    if (raw == nullptr || *raw == '\0') return default_chromatic_budget;
    char* end = nullptr;
    errno = 0;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (errno != 0 || end == raw || *end != '\0')
        throw domain_error("SBAN_BUDGET must be a non-negative integer, got '" +
                           std::string(raw) + "'");
    return v;
}

struct EmitOptions {
    std::string format = "human";
    std::string output;
};

void add_emit_options(CLI::App* cmd, EmitOptions& e) {
    cmd->add_option("--format", e.format, "Output mode for stdout: human or json")
        ->check(CLI::IsMember({"human", "json"}));
    cmd->add_option("-o,--output", e.output, "Also write the JSON result to this file");
}

// Every subcommand funnels its result through here: optional file artifact,
// then either the same JSON or a human rendering on stdout.
template <typename HumanFn>
void emit(const EmitOptions& e, const json& j, HumanFn&& human) {
    if (!e.output.empty()) write_json_file(e.output, j);
    if (e.format == "json")
        std::cout << dump_json(j) << '\n';
    else
        human();
}

enum class InputKind { instance, confusability, quotient };

InputKind classify_input(const json& j) {
    if (j.is_object() && j.contains("network")) return InputKind::instance;
    if (j.is_object() && j.contains("classes")) return InputKind::quotient;
    if (j.is_object() && j.contains("nodes")) return InputKind::confusability;
    throw domain_error(
        "input is none of: instance {network, schedule}, confusability graph "
        "{n, p, nodes, edges}, image quotient {n, vertices, classes, edges}");
}

std::string schedule_str(const UpdateSchedule& w) {
    std::string s = "(";
    for (std::size_t b = 0; b < w.blocks().size(); ++b) {
        if (b > 0) s += ",";
        s += "{";
        const auto& blk = w.blocks()[b];
        for (std::size_t i = 0; i < blk.size(); ++i) {
            if (i > 0) s += ",";
            s += std::to_string(blk[i]);
        }
        s += "}";
    }
    return s + ")";
}

std::string table_str(const BooleanNetwork& f) {
    std::string s;
    for (Word x = 0; x < f.state_count(); ++x) {
        if (x > 0) s += ' ';
        s += std::to_string(f.table()[x]);
    }
    return s;
}

void print_chromatic(const ChromaticResult& r) {
    if (r.exact)
        std::cout << "chi: " << r.upper << " (exact)\n";
    else
        std::cout << "chi: in [" << r.lower << ", " << r.upper << "] (budget exhausted)\n";
    std::cout << "clique lower bound: " << r.clique.size() << '\n';
    std::cout << "budget used: " << r.budget_used << '\n';
}

void print_search_report(const SearchReport& r) {
    std::cout << "instances: " << r.cursor << "/" << r.instances_total
              << (r.completed ? " (complete)" : " (paused)") << '\n';
    if (r.worst_exact >= 0) {
        std::cout << "worst exact kappa: " << r.worst_exact << '\n';
        std::cout << "witness table: " << table_str(r.witness->network) << '\n';
        std::cout << "witness schedule: " << schedule_str(r.witness->schedule) << '\n';
        if (r.witness_spec)
            std::cout << "witness generator: " << r.witness_spec->kind << " n="
                      << r.witness_spec->n << " seed=" << r.witness_spec->seed << '\n';
    } else {
        std::cout << "worst exact kappa: none resolved\n";
    }
    std::cout << "inexact instances: " << r.inexact_count << '\n';
    if (r.unresolved_upper_max >= 0)
        std::cout << "largest unresolved upper bound: " << r.unresolved_upper_max << '\n';
    std::cout << "conjecture: " << r.conjecture << '\n';
    std::cout << "violations: " << r.violations.size() << '\n';
    std::cout << "chromatic budget spent: " << r.budget_spent << '\n';
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw domain_error("cannot open '" + path + "' for writing");
    out << text;
    if (!out.flush()) throw domain_error("failed writing '" + path + "'");
}

int run(int argc, char** argv) {
    CLI::App app{"Simulation cost of block-sequential Boolean automata networks"};
    app.require_subcommand(1);
    const std::uint64_t budget_default = default_budget_from_env();

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a named or seeded instance");
    GeneratorSpec gen_spec;
    gen_spec.kind = "swap";
    EmitOptions gen_emit;
    gen->add_option("--kind", gen_spec.kind,
                    "swap | figure4 | random | random-bijective | constant | identity");
    gen->add_option("--n", gen_spec.n, "Number of automata");
    gen->add_option("--seed", gen_spec.seed, "Seed for the random kinds");
    add_emit_options(gen, gen_emit);
    gen->callback([&] {
        const ScheduledNetwork inst = build_instance(gen_spec);
        emit(gen_emit, instance_to_json(inst), [&] {
            std::cout << "kind: " << gen_spec.kind << '\n';
            std::cout << "n: " << inst.network.size() << '\n';
            std::cout << "table: " << table_str(inst.network) << '\n';
            std::cout << "schedule: " << schedule_str(inst.schedule) << '\n';
        });
    });

    // graph
    auto* graph_cmd = app.add_subcommand("graph", "Build the confusability graph");
    struct {
        std::string input;
        bool quotient = false;
        bool intervals = false;
        int max_n = default_graph_cap;
        int threads = 0;
        std::string dot;
        EmitOptions emit;
    } graph_opt;
    graph_cmd->add_option("-i,--input", graph_opt.input, "Instance JSON")->required();
    graph_cmd->add_flag("--quotient", graph_opt.quotient,
                        "Emit the image quotient instead of the full graph");
    graph_cmd->add_flag("--intervals", graph_opt.intervals,
                        "Annotate edges with their confusable step ranges");
    graph_cmd->add_option("--max-n", graph_opt.max_n, "Refuse instances above this size");
    graph_cmd->add_option("--threads", graph_opt.threads, "Worker threads (0 = hardware)");
    graph_cmd->add_option("--dot", graph_opt.dot, "Also write a Graphviz rendering here");
    add_emit_options(graph_cmd, graph_opt.emit);
    graph_cmd->callback([&] {
        const ScheduledNetwork inst = instance_from_json(read_json_file(graph_opt.input));
        const int threads = resolve_threads(graph_opt.threads);
        if (graph_opt.quotient) {
            const ImageQuotientGraph q =
                build_inecc_graph(inst.network, inst.schedule, graph_opt.max_n, threads);
            if (!graph_opt.dot.empty()) write_text_file(graph_opt.dot, quotient_to_dot(q));
            emit(graph_opt.emit, quotient_to_json(q), [&] {
                std::cout << "image quotient: n = " << q.n << ", vertices = "
                          << q.vertices.size() << ", edges = " << q.graph.edge_count()
                          << '\n';
                for (const auto& [u, v] : q.graph.edges())
                    std::cout << "  " << config_to_string(q.vertices[u], q.n) << " -- "
                              << config_to_string(q.vertices[v], q.n) << '\n';
            });
            return;
        }
        const ConfusabilityGraph g =
            build_necc_graph(inst.network, inst.schedule, graph_opt.intervals,
                             graph_opt.max_n, threads);
        if (!graph_opt.dot.empty()) write_text_file(graph_opt.dot, necc_to_dot(g));
        emit(graph_opt.emit, necc_to_json(g), [&] {
            std::cout << "confusability graph: n = " << g.n << ", p = " << g.p
                      << ", nodes = " << g.graph.node_count() << ", edges = "
                      << g.graph.edge_count() << '\n';
            const std::size_t shown = std::min<std::size_t>(g.graph.edge_count(), 64);
            for (std::size_t e = 0; e < shown; ++e) {
                const auto& [u, v] = g.graph.edges()[e];
                std::cout << "  " << config_to_string(u, g.n) << " -- "
                          << config_to_string(v, g.n);
                if (!g.intervals.empty())
                    std::cout << "  steps [" << g.intervals[e].lo << ", "
                              << g.intervals[e].hi << "]";
                std::cout << '\n';
            }
            if (g.graph.edge_count() > shown)
                std::cout << "  ... (" << g.graph.edge_count() - shown << " more)\n";
        });
    });

    // chromatic
    auto* chrom = app.add_subcommand("chromatic", "Exact chromatic number within a budget");
    struct {
        std::string input;
        std::uint64_t budget;
        int max_n = 12;
        int threads = 0;
        EmitOptions emit;
    } chrom_opt;
    chrom_opt.budget = budget_default;
    chrom->add_option("-i,--input", chrom_opt.input, "Instance or graph JSON")->required();
    chrom->add_option("--budget", chrom_opt.budget,
                      "Branch-node budget (default from SBAN_BUDGET when set)");
    chrom->add_option("--max-n", chrom_opt.max_n,
                      "Refuse instances above this size (instance inputs only)");
    chrom->add_option("--threads", chrom_opt.threads, "Worker threads (0 = hardware)");
    add_emit_options(chrom, chrom_opt.emit);
    chrom->callback([&] {
        const json in = read_json_file(chrom_opt.input);
        ChromaticResult result;
        switch (classify_input(in)) {
        case InputKind::instance: {
            const ScheduledNetwork inst = instance_from_json(in);
            const ConfusabilityGraph g =
                build_necc_graph(inst.network, inst.schedule, false, chrom_opt.max_n,
                                 resolve_threads(chrom_opt.threads));
            const CliqueResult clique =
                max_clique_necc(inst.network, inst.schedule, g.graph);
            result = exact_chromatic_number(g.graph, chrom_opt.budget, clique.members);
            break;
        }
        case InputKind::confusability:
            result = exact_chromatic_number(necc_from_json(in).graph, chrom_opt.budget);
            break;
        case InputKind::quotient:
            result = exact_chromatic_number(quotient_from_json(in).graph, chrom_opt.budget);
            break;
        }
        emit(chrom_opt.emit, chromatic_to_json(result), [&] { print_chromatic(result); });
    });

    // clique
    auto* clique_cmd = app.add_subcommand("clique", "Exact clique number");
    struct {
        std::string input;
        std::uint32_t node_cap = default_clique_node_cap;
        int max_n = default_graph_cap;
        int threads = 0;
        EmitOptions emit;
    } clique_opt;
    clique_cmd->add_option("-i,--input", clique_opt.input, "Instance or graph JSON")
        ->required();
    clique_cmd->add_option("--node-cap", clique_opt.node_cap,
                           "Largest graph the generic solver accepts");
    clique_cmd->add_option("--max-n", clique_opt.max_n,
                           "Refuse instances above this size (instance inputs only)");
    clique_cmd->add_option("--threads", clique_opt.threads, "Worker threads (0 = hardware)");
    add_emit_options(clique_cmd, clique_opt.emit);
    clique_cmd->callback([&] {
        const json in = read_json_file(clique_opt.input);
        CliqueResult result;
        int label_bits = 0; // render members as configurations when > 0
        switch (classify_input(in)) {
        case InputKind::instance: {
            const ScheduledNetwork inst = instance_from_json(in);
            const ConfusabilityGraph g =
                build_necc_graph(inst.network, inst.schedule, false, clique_opt.max_n,
                                 resolve_threads(clique_opt.threads));
            result = max_clique_necc(inst.network, inst.schedule, g.graph);
            label_bits = g.n;
            break;
        }
        case InputKind::confusability: {
            const ConfusabilityGraph g = necc_from_json(in);
            result = max_clique_generic(g.graph, clique_opt.node_cap);
            label_bits = g.n;
            break;
        }
        case InputKind::quotient:
            result = max_clique_generic(quotient_from_json(in).graph, clique_opt.node_cap);
            break;
        }
        emit(clique_opt.emit, clique_to_json(result), [&] {
            std::cout << "omega: " << result.size << '\n';
            std::cout << "members:";
            for (const std::uint32_t m : result.members) {
                if (label_bits > 0)
                    std::cout << ' ' << config_to_string(m, label_bits);
                else
                    std::cout << ' ' << m;
            }
            std::cout << '\n';
        });
    });

    // kappa
    auto* kappa_cmd =
        app.add_subcommand("kappa", "Minimum auxiliary automata for parallel simulation");
    struct {
        std::string input;
        std::uint64_t budget;
        int max_n = 12;
        int threads = 0;
        bool no_witness = false;
        EmitOptions emit;
    } kappa_opt;
    kappa_opt.budget = budget_default;
    kappa_cmd->add_option("-i,--input", kappa_opt.input, "Instance JSON")->required();
    kappa_cmd->add_option("--budget", kappa_opt.budget,
                          "Branch-node budget (default from SBAN_BUDGET when set)");
    kappa_cmd->add_option("--max-n", kappa_opt.max_n, "Refuse instances above this size");
    kappa_cmd->add_option("--threads", kappa_opt.threads, "Worker threads (0 = hardware)");
    kappa_cmd->add_flag("--no-witness", kappa_opt.no_witness,
                        "Skip synthesizing the witness simulator");
    add_emit_options(kappa_cmd, kappa_opt.emit);
    kappa_cmd->callback([&] {
        const ScheduledNetwork inst = instance_from_json(read_json_file(kappa_opt.input));
        const KappaResult result =
            kappa(inst.network, inst.schedule, kappa_opt.budget, kappa_opt.max_n,
                  resolve_threads(kappa_opt.threads), !kappa_opt.no_witness);
        emit(kappa_opt.emit, kappa_to_json(result), [&] {
            if (result.exact)
                std::cout << "kappa: " << result.upper << " (exact)\n";
            else
                std::cout << "kappa: in [" << result.lower << ", " << result.upper
                          << "] (budget exhausted)\n";
            print_chromatic(result.chromatic);
            if (result.witness)
                std::cout << "witness simulator: " << result.witness->network.size()
                          << " automata, schedule "
                          << schedule_str(result.witness->schedule) << '\n';
        });
    });

    // synthesize
    auto* synth = app.add_subcommand("synthesize", "Build a simulator bundle");
    struct {
        std::string input;
        std::uint64_t budget;
        int max_n = 12;
        int threads = 0;
        EmitOptions emit;
    } synth_opt;
    synth_opt.budget = budget_default;
    synth->add_option("-i,--input", synth_opt.input, "Instance JSON")->required();
    synth->add_option("--budget", synth_opt.budget,
                      "Branch-node budget (default from SBAN_BUDGET when set)");
    synth->add_option("--max-n", synth_opt.max_n, "Refuse instances above this size");
    synth->add_option("--threads", synth_opt.threads, "Worker threads (0 = hardware)");
    add_emit_options(synth, synth_opt.emit);
    synth->callback([&] {
        const ScheduledNetwork inst = instance_from_json(read_json_file(synth_opt.input));
        const int threads = resolve_threads(synth_opt.threads);
        const ConfusabilityGraph g = build_necc_graph(inst.network, inst.schedule, false,
                                                      synth_opt.max_n, threads);
        const CliqueResult clique = max_clique_necc(inst.network, inst.schedule, g.graph);
        // An inexact chromatic result still carries a proper coloring, so
        // synthesis proceeds; it just spends more auxiliary automata.
        const ChromaticResult chrom_result =
            exact_chromatic_number(g.graph, synth_opt.budget, clique.members);
        const SynthesisResult bundle =
            synthesize(inst.network, inst.schedule, chrom_result.witness, threads);
        emit(synth_opt.emit, bundle_to_json(bundle), [&] {
            std::cout << "auxiliary automata: " << bundle.k << '\n';
            std::cout << "colors: " << bundle.coloring.count << '\n';
            std::cout << "simulator: " << bundle.network.size() << " automata, schedule "
                      << schedule_str(bundle.schedule) << '\n';
        });
    });

    // verify
    auto* verify = app.add_subcommand("verify", "Re-check a simulator bundle");
    struct {
        std::string input;
        std::string against;
        int threads = 0;
        EmitOptions emit;
    } verify_opt;
    verify->add_option("-i,--input", verify_opt.input, "Simulator bundle JSON")->required();
    verify->add_option("--against", verify_opt.against,
                       "Instance JSON the bundle claims to simulate")
        ->required();
    verify->add_option("--threads", verify_opt.threads, "Worker threads (0 = hardware)");
    add_emit_options(verify, verify_opt.emit);
    verify->callback([&] {
        const SynthesisResult bundle = bundle_from_json(read_json_file(verify_opt.input));
        const ScheduledNetwork inst = instance_from_json(read_json_file(verify_opt.against));
        const VerificationReport report = verify_bundle(
            bundle, inst.network, inst.schedule, resolve_threads(verify_opt.threads));
        emit(verify_opt.emit, verification_to_json(report), [&] {
            std::cout << (report.pass ? "pass" : "fail") << '\n';
            std::cout << "extension: " << (report.extension_ok ? "ok" : "violated") << '\n';
            if (report.counterexample)
                std::cout << "simulation: fails at "
                          << config_to_string(*report.counterexample,
                                              bundle.network.size())
                          << '\n';
            else
                std::cout << "simulation: " << (report.simulation_ok ? "ok" : "not checked")
                          << '\n';
            std::cout << "states checked: " << report.states_checked << '\n';
        });
    });

    // search
    auto* search = app.add_subcommand("search", "Hunt for worst-case kappa");
    SearchOptions search_opt;
    search_opt.chromatic_budget = budget_default;
    search_opt.threads = 0;
    search_opt.max_n = 12;
    EmitOptions search_emit;
    search->add_option("--n", search_opt.n, "Number of automata")->required();
    search->add_option("--strategy", search_opt.strategy, "exhaustive or random")
        ->check(CLI::IsMember({"exhaustive", "random"}));
    search->add_option("--samples", search_opt.samples, "Random strategy: instance count");
    search->add_option("--seed", search_opt.seed, "Random strategy: master seed");
    search->add_option("--budget", search_opt.chromatic_budget,
                       "Per-instance branch-node budget (default from SBAN_BUDGET)");
    search->add_flag("--include-swap,!--no-include-swap", search_opt.include_swap,
                     "Random strategy: make instance 0 the swap network");
    search->add_flag("--stratify-blocks", search_opt.stratify_blocks,
                     "Random strategy: cycle schedules through all block counts");
    search->add_flag("--collapse-schedules", search_opt.collapse_schedules,
                     "Exhaustive strategy: one schedule per relabeling class");
    search->add_option("--limit", search_opt.instance_limit,
                       "Stop after this many instances this run (0 = no limit)");
    search->add_option("--flush-every", search_opt.flush_every,
                       "Checkpoint cadence in instances");
    search->add_option("--checkpoint", search_opt.checkpoint_path,
                       "Checkpoint file; an existing one is resumed");
    search->add_option("--threads", search_opt.threads, "Worker threads (0 = hardware)");
    search->add_option("--max-n", search_opt.max_n, "Refuse sizes above this");
    add_emit_options(search, search_emit);
    search->callback([&] {
        const SearchReport report = search_worst_kappa(search_opt);
        emit(search_emit, search_report_to_json(report),
             [&] { print_search_report(report); });
    });

    // export
    auto* export_cmd = app.add_subcommand("export", "Render a graph JSON as Graphviz DOT");
    struct {
        std::string input;
        std::string output;
    } export_opt;
    export_cmd->add_option("-i,--input", export_opt.input, "Confusability or quotient JSON")
        ->required();
    export_cmd->add_option("-o,--output", export_opt.output,
                           "DOT file to write (stdout when omitted)");
    export_cmd->callback([&] {
        const json in = read_json_file(export_opt.input);
        std::string dot;
        switch (classify_input(in)) {
        case InputKind::confusability:
            dot = necc_to_dot(necc_from_json(in));
            break;
        case InputKind::quotient:
            dot = quotient_to_dot(quotient_from_json(in));
            break;
        case InputKind::instance:
            throw domain_error("export expects a graph JSON; run the graph command first");
        }
        if (export_opt.output.empty())
            std::cout << dot;
        else
            write_text_file(export_opt.output, dot);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
