#pragma once

// JSON, CSV and plain-text renderings of library results. Every JSON report
// carries its request fields (type, chi, k) and parses back to an equal
// value. Schemas are listed in README.md.

#include <string>
#include <vector>

#include <json.hpp>

#include "cherednik/rank2.hpp"
#include "cherednik/verma.hpp"

namespace cherednik {

using Json = nlohmann::ordered_json;

Json to_json(const ClassifyResult& r);
ClassifyResult classify_from_json(const Json& j);

Json to_json(const GramReport& r);
GramReport gram_from_json(const Json& j);

Json to_json(const ConjectureReport& r);
ConjectureReport conjecture_from_json(const Json& j);

// Root system, invariants and character table.
Json info_json(RootType type);
std::string info_table(RootType type);

// Sweep/classify CSV: type,k1,k2,chi,finite,m,dim. Single-orbit types repeat
// k1 in the k2 column; m and dim are empty for infinite modules.
std::string csv_header();
std::string csv_row(const ClassifyResult& r);

std::string classify_table(const ClassifyResult& r);
std::string gram_table(const GramReport& r);

}  // namespace cherednik
