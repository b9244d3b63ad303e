// JSON and TSV serialization for the domain types. Everything on the wire is
// an exact rational in "p/q" form; JSON objects are emitted with nlohmann's
// compact dump, which orders keys alphabetically, so identical values always
// serialize to identical bytes. Each to_json has a matching from_json so
// outputs can be parsed back into the originating type.
#pragma once

#include "ellip/buildings.hpp"
#include "ellip/embedding.hpp"
#include "ellip/indices.hpp"
#include "ellip/spectrum.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace ellip::io {

using Json = nlohmann::json;

Json hypothesis_report_to_json(const HypothesisReport& report);
HypothesisReport hypothesis_report_from_json(const Json& j);

Json spectrum_to_json(const std::vector<SpectrumEntry>& entries);
std::vector<SpectrumEntry> spectrum_from_json(const Json& j);

Json embed_verdict_to_json(const EmbedVerdict& verdict);
EmbedVerdict embed_verdict_from_json(const Json& j);

Json capacity_to_json(const CapacityResult& result);
CapacityResult capacity_from_json(const Json& j);

Json collection_to_json(const OrbitCollection& collection);
OrbitCollection collection_from_json(const Json& j);

Json building_to_json(const Building& building);
Building building_from_json(const Json& j);

Json compactness_report_to_json(const CompactnessReport& report);
CompactnessReport compactness_report_from_json(const Json& j);

Json parity_to_json(const ParityReport& report);
ParityReport parity_from_json(const Json& j);

Json neck_setup_to_json(const NeckStretchSetup& setup);
NeckStretchSetup neck_setup_from_json(const Json& j);

// TSV emitters; every line ends in '\n'.
std::string spectrum_to_tsv(const std::vector<SpectrumEntry>& entries, bool decimal_hint);
std::string nk_to_tsv(const std::vector<Rat>& values, bool decimal_hint);
std::string staircase_to_tsv(const std::vector<StaircaseRow>& rows, bool decimal_hint);

}  // namespace ellip::io
