#pragma once

#include <vector>

#include "talab/backtest_types.hpp"

// Equity-curve summaries and ex-post exposure targeting. "Risk" throughout
// is the population standard deviation of per-step equity returns; drawdown
// is reported but never targeted.

namespace talab {

struct MetricsSummary {
  double total_return_pct = 0.0;
  double per_step_volatility = 0.0;
  double max_drawdown_pct = 0.0;  // in [0, 100)
  Index steps = 0;
  Index trades_count = 0;
};

enum class TargetMode { Risk, Return };

struct TargetSpec {
  TargetMode mode = TargetMode::Risk;
  double target = 0.01;  // volatility per step (Risk) or total return fraction (Return)
  double w_max = 1.0;    // exposure cap, >= 1
};

struct ExposureResult {
  double w = 0.0;  // cash/strategy blend weight, in [0, w_max]
  EquityCurve scaled_curve;
  MetricsSummary scaled_summary;
};

// Endpoint total return, per-step return volatility and running-peak max
// drawdown. Throws std::invalid_argument ("curve too short") for length < 2.
MetricsSummary summarize(const EquityCurve& curve, const std::vector<Trade>& trades);

// Picks the blend weight w that hits the target ex post (capped at w_max;
// w_max for a zero-volatility curve in Risk mode, 0 for a non-positive
// realized return in Return mode), then rebuilds the curve from per-step
// returns scaled by w.
ExposureResult target_exposure(const EquityCurve& strategy_curve, const TargetSpec& spec);

}  // namespace talab
