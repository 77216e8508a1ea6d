#pragma once

// JSON (de)serialization for every artifact the tools exchange. Emission is
// deterministic: objects serialize with sorted keys, so byte-identical
// inputs and flags give byte-identical outputs.

#include <string>

#include <json.hpp>

#include "sban/coloring.hpp"
#include "sban/confusability.hpp"
#include "sban/generators.hpp"
#include "sban/search.hpp"
#include "sban/synthesis.hpp"

namespace sban {

using json = nlohmann::json;

json network_to_json(const BooleanNetwork& f);
BooleanNetwork network_from_json(const json& j);

json schedule_to_json(const UpdateSchedule& w);
UpdateSchedule schedule_from_json(const json& j);

json instance_to_json(const ScheduledNetwork& sn);
ScheduledNetwork instance_from_json(const json& j);

json generator_spec_to_json(const GeneratorSpec& spec);
GeneratorSpec generator_spec_from_json(const json& j);

json necc_to_json(const ConfusabilityGraph& g);
ConfusabilityGraph necc_from_json(const json& j);
json quotient_to_json(const ImageQuotientGraph& g);
ImageQuotientGraph quotient_from_json(const json& j);

json coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const json& j);

json chromatic_to_json(const ChromaticResult& r);
json clique_to_json(const CliqueResult& r);

json bundle_to_json(const SynthesisResult& r);
SynthesisResult bundle_from_json(const json& j);

json verification_to_json(const VerificationReport& r);
json kappa_to_json(const KappaResult& r);

json search_report_to_json(const SearchReport& r);
SearchReport search_report_from_json(const json& j);

json read_json_file(const std::string& path);
// Writes via a temp file and rename so a crash never leaves a torn file.
void write_json_file(const std::string& path, const json& j);

std::string dump_json(const json& j);

} // namespace sban
