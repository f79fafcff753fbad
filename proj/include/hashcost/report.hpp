#pragma once

#include <string>

#include <json.hpp>

#include "hashcost/circuit.hpp"
#include "hashcost/ft_cost.hpp"

namespace hashcost {

using nlohmann::ordered_json;

enum class Format { Json, Csv, Text };
Format parse_format(const std::string& s);

ordered_json counts_json(const ResourceCounts& rc);
// Every CostReport field plus the inputs. Big integers are decimal strings.
ordered_json cost_report_json(const CostReport& r);

// Flattens nested objects to dotted keys for csv ("field,value") and text ("field: value").
std::string render(const ordered_json& j, Format f);

}  // namespace hashcost
