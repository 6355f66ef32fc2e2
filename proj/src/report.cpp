#include "talab/report.hpp"

#include <fstream>
#include <numbers>

#include "talab/csv.hpp"

namespace talab {

nlohmann::json metrics_to_json(const MetricsSummary& m) {
  return {{"total_return_pct", m.total_return_pct},
          {"per_step_volatility", m.per_step_volatility},
          {"max_drawdown_pct", m.max_drawdown_pct},
          {"steps", m.steps},
          {"trades_count", m.trades_count}};
}

nlohmann::json report_to_json(const BacktestReport& report, const nlohmann::json& config) {
  nlohmann::json trades = nlohmann::json::array();
  for (const auto& t : report.trades) {
    nlohmann::json jt = {{"entry_index", t.entry_index},
                         {"entry_price", t.entry_price},
                         {"exit_price", t.exit_price},
                         {"trade_return", t.trade_return}};
    if (t.exit_index)
      jt["exit_index"] = *t.exit_index;
    else
      jt["exit_index"] = nullptr;
    trades.push_back(std::move(jt));
  }

  nlohmann::json j = {{"strategy", report.strategy},
                      {"config", config},
                      {"n", report.equity.size()},
                      {"fee_rate", report.fee_rate},
                      {"total_return_pct", report.total_return_pct},
                      {"final_equity", report.equity.final_value()},
                      {"metrics", metrics_to_json(report.metrics)},
                      {"trades", std::move(trades)}};
  j["buyhold_return_pct"] =
      report.buyhold_return_pct ? nlohmann::json(*report.buyhold_return_pct) : nullptr;
  j["excess_over_buyhold_pct"] =
      report.excess_over_buyhold_pct ? nlohmann::json(*report.excess_over_buyhold_pct) : nullptr;
  return j;
}

nlohmann::json world_to_json(const GeneratedWorld& world) {
  const char* noise_kind = to_string(world.spec.noise.kind);
  nlohmann::json noise = {{"kind", noise_kind}, {"alpha", world.spec.noise.alpha}};
  if (world.spec.noise.kind == NoiseKind::Energy) noise["k"] = world.spec.noise.k;

  nlohmann::json segments = nlohmann::json::array();
  if (world.spec.is_trend()) {
    for (const auto& s : world.trend_segments)
      segments.push_back({{"start", s.start}, {"slope", s.slope}});
  } else {
    for (const auto& s : world.cycle_segments)
      segments.push_back({{"start", s.start},
                          {"amplitude", s.amplitude},
                          {"angular_freq", s.angular_freq},
                          {"period", 2.0 * std::numbers::pi / s.angular_freq}});
  }

  return {{"kind", world.spec.is_trend() ? "trend" : "cycle"},
          {"n", world.spec.n},
          {"seed", world.spec.seed},
          {"initial_price", world.spec.initial_price},
          {"noise", std::move(noise)},
          {"segments", std::move(segments)},
          {"clean_clamped", world.clean_clamped},
          {"noisy_clamped", world.noisy_clamped}};
}

void write_json(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw CsvError("cannot open '" + path + "' for writing", 0);
  out << j.dump(2) << '\n';
}

}  // namespace talab
