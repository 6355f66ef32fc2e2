#pragma once

#include <string>

#include <json.hpp>

#include "talab/backtest.hpp"
#include "talab/datagen.hpp"

// JSON views of the report and world types. Field names are stable; see the
// README for the documented schema.

namespace talab {

nlohmann::json metrics_to_json(const MetricsSummary& m);

// Full backtest report; `config` is echoed verbatim under "config".
nlohmann::json report_to_json(const BacktestReport& report, const nlohmann::json& config);

// The resolved recipe of a generated world: pattern kind, length, seed,
// noise, and the (possibly sampled) segment list.
nlohmann::json world_to_json(const GeneratedWorld& world);

void write_json(const std::string& path, const nlohmann::json& j);

}  // namespace talab
