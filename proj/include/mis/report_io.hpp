#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "mis/report.hpp"
#include "mis/sweep.hpp"

namespace mis {

/// Full structure. Exact integers are decimal strings; interval bounds carry
/// both rounded decimals and exact "p/q" endpoints.
nlohmann::json to_json(const SweepReport& report);
nlohmann::json to_json(const Report& report);
nlohmann::json to_json(const RealInterval& interval);

/// One row per parameter entry:
/// theorem,n,source,t,graphs,max_mis,bound_lo,bound_hi,attained,witness
std::string to_csv(const SweepReport& report);

} // namespace mis
