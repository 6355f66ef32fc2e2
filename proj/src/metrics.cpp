#include "talab/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace talab {

EquityCurve::EquityCurve(Eigen::ArrayXd e) : equity(std::move(e)) {
  if (equity.size() < 1) throw std::invalid_argument("equity curve must not be empty");
  if (equity[0] != 1.0) throw std::invalid_argument("equity curve must start at 1.0");
  if (!(equity > 0.0).all()) throw std::invalid_argument("equity curve values must be > 0");
}

namespace {

Eigen::ArrayXd step_returns(const EquityCurve& curve) {
  const Index n = curve.size();
  return curve.equity.tail(n - 1) / curve.equity.head(n - 1) - 1.0;
}

double population_stdev(const Eigen::ArrayXd& x) {
  if (x.size() == 0) return 0.0;
  return std::sqrt((x - x.mean()).square().mean());
}

}  // namespace

MetricsSummary summarize(const EquityCurve& curve, const std::vector<Trade>& trades) {
  const Index n = curve.size();
  if (n < 2) throw std::invalid_argument("curve too short");

  double peak = curve[0];
  double worst = 0.0;
  for (Index t = 0; t < n; ++t) {
    peak = std::max(peak, curve[t]);
    worst = std::max(worst, 1.0 - curve[t] / peak);
  }

  MetricsSummary s;
  s.total_return_pct = (curve.final_value() / curve[0] - 1.0) * 100.0;
  s.per_step_volatility = population_stdev(step_returns(curve));
  s.max_drawdown_pct = worst * 100.0;
  s.steps = n;
  s.trades_count = static_cast<Index>(trades.size());
  return s;
}

ExposureResult target_exposure(const EquityCurve& strategy_curve, const TargetSpec& spec) {
  if (!(spec.target > 0.0)) throw std::invalid_argument("target must be > 0");
  if (!(spec.w_max >= 1.0)) throw std::invalid_argument("w_max must be >= 1");
  const Index n = strategy_curve.size();
  if (n < 2) throw std::invalid_argument("curve too short");

  const Eigen::ArrayXd r = step_returns(strategy_curve);
  double w = 0.0;
  if (spec.mode == TargetMode::Risk) {
    const double vol = population_stdev(r);
    w = vol == 0.0 ? spec.w_max : std::min(spec.w_max, spec.target / vol);
  } else {
    const double total = strategy_curve.final_value() / strategy_curve[0] - 1.0;
    w = total > 0.0 ? std::min(spec.w_max, spec.target / total) : 0.0;
  }

  Eigen::ArrayXd scaled(n);
  scaled[0] = 1.0;
  for (Index t = 1; t < n; ++t) {
    const double growth = 1.0 + w * r[t - 1];
    if (!(growth > 0.0))
      throw std::domain_error("exposure scaling drives equity non-positive");
    scaled[t] = scaled[t - 1] * growth;
  }
  EquityCurve scaled_curve(std::move(scaled));
  MetricsSummary summary = summarize(scaled_curve, {});
  return ExposureResult{w, std::move(scaled_curve), summary};
}

}  // namespace talab
