#include "sban/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <limits>

namespace sban {

namespace {

const json& need(const json& j, const char* key) {
    if (!j.is_object())
        throw domain_error("expected a JSON object containing field '" + std::string(key) +
                           "'");
    auto it = j.find(key);
    if (it == j.end()) throw domain_error("missing field '" + std::string(key) + "'");
    return *it;
}

std::int64_t need_int(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_number_integer())
        throw domain_error("field '" + std::string(key) + "' must be an integer");
    return v.get<std::int64_t>();
}

std::uint64_t need_u64(const json& j, const char* key) {
    const json& v = need(j, key);
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_number_integer() && v.get<std::int64_t>() >= 0)
        return static_cast<std::uint64_t>(v.get<std::int64_t>());
    throw domain_error("field '" + std::string(key) + "' must be a non-negative integer");
}

bool need_bool(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_boolean())
        throw domain_error("field '" + std::string(key) + "' must be a boolean");
    return v.get<bool>();
}

std::string need_string(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_string())
        throw domain_error("field '" + std::string(key) + "' must be a string");
    return v.get<std::string>();
}

const json& need_array(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_array())
        throw domain_error("field '" + std::string(key) + "' must be an array");
    return v;
}

std::vector<Graph::Edge> edges_from_json(const json& j, const char* key) {
    const json& arr = need_array(j, key);
    std::vector<Graph::Edge> edges;
    edges.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const json& el = arr[i];
        const std::string where = std::string(key) + "[" + std::to_string(i) + "]";
        if (!el.is_array() || el.size() != 2 || !el[0].is_number_integer() ||
            !el[1].is_number_integer() || el[0].get<std::int64_t>() < 0 ||
            el[1].get<std::int64_t>() < 0)
            throw domain_error("field '" + where +
                               "' must be a pair of non-negative integers");
        edges.emplace_back(el[0].get<std::uint32_t>(), el[1].get<std::uint32_t>());
    }
    return edges;
}

} // namespace

json network_to_json(const BooleanNetwork& f) {
    json j;
    j["n"] = f.size();
    j["table"] = f.table();
    return j;
}

BooleanNetwork network_from_json(const json& j) {
    const std::int64_t n = need_int(j, "n");
    if (n < 1 || n > max_automata)
        throw domain_error("field 'n' = " + std::to_string(n) + " is outside [1, " +
                           std::to_string(max_automata) + "]");
    const json& arr = need_array(j, "table");
    std::vector<Word> table;
    table.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const json& el = arr[i];
        if (!el.is_number_integer() || el.get<std::int64_t>() < 0)
            throw domain_error("field 'table[" + std::to_string(i) +
                               "]' must be a non-negative integer");
        const std::int64_t v = el.get<std::int64_t>();
        if (v > static_cast<std::int64_t>(full_mask(static_cast<int>(n))))
            throw domain_error("field 'table[" + std::to_string(i) + "]' = " +
                               std::to_string(v) + " exceeds the " + std::to_string(n) +
                               "-bit configuration range");
        table.push_back(static_cast<Word>(v));
    }
    return BooleanNetwork(static_cast<int>(n), std::move(table));
}

json schedule_to_json(const UpdateSchedule& w) {
    json j;
    j["n"] = w.size();
    j["blocks"] = w.blocks();
    return j;
}

UpdateSchedule schedule_from_json(const json& j) {
    const std::int64_t n = need_int(j, "n");
    const json& arr = need_array(j, "blocks");
    std::vector<std::vector<int>> blocks;
    blocks.reserve(arr.size());
    for (std::size_t b = 0; b < arr.size(); ++b) {
        if (!arr[b].is_array())
            throw domain_error("field 'blocks[" + std::to_string(b) + "]' must be an array");
        std::vector<int> blk;
        for (const json& el : arr[b]) {
            if (!el.is_number_integer())
                throw domain_error("field 'blocks[" + std::to_string(b) +
                                   "]' must contain integers");
            blk.push_back(el.get<int>());
        }
        blocks.push_back(std::move(blk));
    }
    return UpdateSchedule(static_cast<int>(n), std::move(blocks));
}

json instance_to_json(const ScheduledNetwork& sn) {
    json j;
    j["network"] = network_to_json(sn.network);
    j["schedule"] = schedule_to_json(sn.schedule);
    return j;
}

ScheduledNetwork instance_from_json(const json& j) {
    BooleanNetwork f = network_from_json(need(j, "network"));
    UpdateSchedule w = schedule_from_json(need(j, "schedule"));
    if (f.size() != w.size())
        throw domain_error("field 'schedule' covers " + std::to_string(w.size()) +
                           " automata but field 'network' has " + std::to_string(f.size()));
    return {std::move(f), std::move(w)};
}

json generator_spec_to_json(const GeneratorSpec& spec) {
    json j;
    j["kind"] = spec.kind;
    j["n"] = spec.n;
    j["seed"] = spec.seed;
    return j;
}

GeneratorSpec generator_spec_from_json(const json& j) {
    GeneratorSpec spec;
    spec.kind = need_string(j, "kind");
    spec.n = static_cast<int>(need_int(j, "n"));
    spec.seed = need_u64(j, "seed");
    return spec;
}

json necc_to_json(const ConfusabilityGraph& g) {
    json j;
    j["n"] = g.n;
    j["p"] = g.p;
    j["nodes"] = g.graph.node_count();
    json edges = json::array();
    for (const auto& [u, v] : g.graph.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    if (!g.intervals.empty()) {
        json iv = json::array();
        for (const auto& s : g.intervals) iv.push_back({s.lo, s.hi});
        j["intervals"] = std::move(iv);
    }
    return j;
}

ConfusabilityGraph necc_from_json(const json& j) {
    ConfusabilityGraph g;
    g.n = static_cast<int>(need_int(j, "n"));
    if (g.n < 1 || g.n > max_automata)
        throw domain_error("field 'n' = " + std::to_string(g.n) + " is outside [1, " +
                           std::to_string(max_automata) + "]");
    g.p = static_cast<int>(need_int(j, "p"));
    if (g.p < 1 || g.p > g.n)
        throw domain_error("field 'p' = " + std::to_string(g.p) + " is outside [1, n]");
    const std::int64_t nodes = need_int(j, "nodes");
    const std::int64_t expected = std::int64_t{1} << g.n;
    if (nodes != expected)
        throw domain_error("field 'nodes' = " + std::to_string(nodes) + " but an " +
                           std::to_string(g.n) + "-automaton graph has " +
                           std::to_string(expected) + " nodes");
    g.graph = Graph(static_cast<std::uint32_t>(nodes), edges_from_json(j, "edges"));
    if (j.contains("intervals")) {
        const json& arr = need_array(j, "intervals");
        if (arr.size() != g.graph.edge_count())
            throw domain_error("field 'intervals' has " + std::to_string(arr.size()) +
                               " entries for " + std::to_string(g.graph.edge_count()) +
                               " edges");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const json& el = arr[i];
            if (!el.is_array() || el.size() != 2 || !el[0].is_number_integer() ||
                !el[1].is_number_integer())
                throw domain_error("field 'intervals[" + std::to_string(i) +
                                   "]' must be a pair of integers");
            g.intervals.push_back({el[0].get<int>(), el[1].get<int>()});
        }
    }
    return g;
}

json quotient_to_json(const ImageQuotientGraph& g) {
    json j;
    j["n"] = g.n;
    j["vertices"] = g.vertices;
    j["classes"] = g.classes;
    json edges = json::array();
    for (const auto& [u, v] : g.graph.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j;
}

ImageQuotientGraph quotient_from_json(const json& j) {
    ImageQuotientGraph g;
    g.n = static_cast<int>(need_int(j, "n"));
    if (g.n < 1 || g.n > max_automata)
        throw domain_error("field 'n' = " + std::to_string(g.n) + " is outside [1, " +
                           std::to_string(max_automata) + "]");
    const json& verts = need_array(j, "vertices");
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (!verts[i].is_number_integer() || verts[i].get<std::int64_t>() < 0)
            throw domain_error("field 'vertices[" + std::to_string(i) +
                               "]' must be a non-negative integer");
        g.vertices.push_back(verts[i].get<Word>());
    }
    const json& classes = need_array(j, "classes");
    if (classes.size() != g.vertices.size())
        throw domain_error("field 'classes' has " + std::to_string(classes.size()) +
                           " entries for " + std::to_string(g.vertices.size()) +
                           " vertices");
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (!classes[i].is_array())
            throw domain_error("field 'classes[" + std::to_string(i) +
                               "]' must be an array");
        std::vector<Word> cls;
        for (const json& el : classes[i]) {
            if (!el.is_number_integer() || el.get<std::int64_t>() < 0)
                throw domain_error("field 'classes[" + std::to_string(i) +
                                   "]' must contain non-negative integers");
            cls.push_back(el.get<Word>());
        }
        g.classes.push_back(std::move(cls));
    }
    g.graph = Graph(static_cast<std::uint32_t>(g.vertices.size()),
                    edges_from_json(j, "edges"));
    return g;
}

json coloring_to_json(const Coloring& c) {
    json j;
    j["colors"] = c.colors;
    j["count"] = c.count;
    return j;
}

Coloring coloring_from_json(const json& j) {
    const json& arr = need_array(j, "colors");
    std::vector<int> colors;
    colors.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_number_integer())
            throw domain_error("field 'colors[" + std::to_string(i) + "]' must be an integer");
        colors.push_back(arr[i].get<int>());
    }
    Coloring c = make_coloring(std::move(colors));
    const std::int64_t count = need_int(j, "count");
    if (count != c.count)
        throw domain_error("field 'count' = " + std::to_string(count) + " but the colors use " +
                           std::to_string(c.count) + " distinct ids");
    return c;
}

json chromatic_to_json(const ChromaticResult& r) {
    json j;
    j["lower"] = r.lower;
    j["upper"] = r.upper;
    j["exact"] = r.exact;
    j["budget_used"] = r.budget_used;
    j["clique"] = r.clique;
    j["witness"] = coloring_to_json(r.witness);
    return j;
}

json clique_to_json(const CliqueResult& r) {
    json j;
    j["size"] = r.size;
    j["members"] = r.members;
    return j;
}

json bundle_to_json(const SynthesisResult& r) {
    json j;
    j["k"] = r.k;
    j["embedding"] = r.embedding.map();
    j["network"] = network_to_json(r.network);
    j["schedule"] = schedule_to_json(r.schedule);
    j["coloring"] = coloring_to_json(r.coloring);
    return j;
}

SynthesisResult bundle_from_json(const json& j) {
    BooleanNetwork fp = network_from_json(need(j, "network"));
    UpdateSchedule wp = schedule_from_json(need(j, "schedule"));
    if (fp.size() != wp.size())
        throw domain_error("bundle network and schedule disagree on size");
    const json& emb = need_array(j, "embedding");
    std::vector<int> map;
    map.reserve(emb.size());
    for (const json& el : emb) {
        if (!el.is_number_integer())
            throw domain_error("field 'embedding' must contain integers");
        map.push_back(el.get<int>());
    }
    const int domain = static_cast<int>(map.size());
    Embedding h(domain, fp.size(), std::move(map));
    const std::int64_t k = need_int(j, "k");
    if (k != fp.size() - h.domain_size())
        throw domain_error("field 'k' = " + std::to_string(k) + " but the bundle adds " +
                           std::to_string(fp.size() - h.domain_size()) + " automata");
    Coloring col = coloring_from_json(need(j, "coloring"));
    return {std::move(fp), std::move(wp), std::move(h), static_cast<int>(k), std::move(col)};
}

json verification_to_json(const VerificationReport& r) {
    json j;
    j["pass"] = r.pass;
    j["extension_ok"] = r.extension_ok;
    j["simulation_ok"] = r.simulation_ok;
    j["counterexample"] = r.counterexample ? json(*r.counterexample) : json(nullptr);
    j["states_checked"] = r.states_checked;
    return j;
}

json kappa_to_json(const KappaResult& r) {
    json j;
    j["kappa"] = {{"lower", r.lower}, {"upper", r.upper}, {"exact", r.exact}};
    j["chromatic"] = chromatic_to_json(r.chromatic);
    j["witness"] = r.witness ? bundle_to_json(*r.witness) : json(nullptr);
    return j;
}

json search_report_to_json(const SearchReport& r) {
    json j;
    j["n"] = r.n;
    j["strategy"] = r.strategy;
    j["samples"] = r.samples;
    j["seed"] = r.seed;
    j["chromatic_budget"] = r.chromatic_budget;
    j["include_swap"] = r.include_swap;
    j["stratify_blocks"] = r.stratify_blocks;
    j["collapse_schedules"] = r.collapse_schedules;
    j["instances_total"] = r.instances_total;
    j["cursor"] = r.cursor;
    j["completed"] = r.completed;
    j["worst_exact"] = r.worst_exact >= 0 ? json(r.worst_exact) : json(nullptr);
    j["witness"] = r.witness ? instance_to_json(*r.witness) : json(nullptr);
    j["witness_spec"] = r.witness_spec ? generator_spec_to_json(*r.witness_spec) : json(nullptr);
    j["inexact_count"] = r.inexact_count;
    j["unresolved_upper_max"] =
        r.unresolved_upper_max >= 0 ? json(r.unresolved_upper_max) : json(nullptr);
    j["conjecture"] = r.conjecture;
    json viols = json::array();
    for (const auto& v : r.violations) {
        json e;
        e["instance"] = v.instance;
        e["kappa"] = v.kappa_value;
        e["witness"] = instance_to_json(v.witness);
        viols.push_back(std::move(e));
    }
    j["violations"] = std::move(viols);
    j["budget_spent"] = r.budget_spent;
    // Slot for the variant where the simulator may pick any sequential
    // order; not computed by this tool.
    j["free_order_variant"] = nullptr;
    return j;
}

SearchReport search_report_from_json(const json& j) {
    SearchReport r;
    r.n = static_cast<int>(need_int(j, "n"));
    r.strategy = need_string(j, "strategy");
    r.samples = need_u64(j, "samples");
    r.seed = need_u64(j, "seed");
    r.chromatic_budget = need_u64(j, "chromatic_budget");
    r.include_swap = need_bool(j, "include_swap");
    r.stratify_blocks = need_bool(j, "stratify_blocks");
    r.collapse_schedules = need_bool(j, "collapse_schedules");
    r.instances_total = need_u64(j, "instances_total");
    r.cursor = need_u64(j, "cursor");
    r.completed = need_bool(j, "completed");
    const json& we = need(j, "worst_exact");
    r.worst_exact = we.is_null() ? -1 : we.get<int>();
    const json& wit = need(j, "witness");
    if (!wit.is_null()) r.witness = instance_from_json(wit);
    const json& spec = need(j, "witness_spec");
    if (!spec.is_null()) r.witness_spec = generator_spec_from_json(spec);
    r.inexact_count = need_u64(j, "inexact_count");
    const json& uu = need(j, "unresolved_upper_max");
    r.unresolved_upper_max = uu.is_null() ? -1 : uu.get<int>();
    r.conjecture = need_string(j, "conjecture");
    for (const json& e : need_array(j, "violations")) {
        SearchViolation v{need_u64(e, "instance"), static_cast<int>(need_int(e, "kappa")),
                          instance_from_json(need(e, "witness"))};
        r.violations.push_back(std::move(v));
    }
    r.budget_spent = need_u64(j, "budget_spent");
    return r;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open '" + path + "' for reading");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw domain_error("'" + path + "' is not valid JSON: " + e.what());
    }
}

void write_json_file(const std::string& path, const json& j) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw domain_error("cannot open '" + tmp + "' for writing");
        out << dump_json(j) << '\n';
        if (!out) throw domain_error("failed writing '" + tmp + "'");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw domain_error("failed to move '" + tmp + "' into place");
}

std::string dump_json(const json& j) { return j.dump(2); }

} // namespace sban
