#include "talab/indicators.hpp"

#include <stdexcept>

namespace talab {

ValueSeries sma(const PriceSeries& prices, const SmaSpec& spec) {
  if (spec.window < 1) throw std::invalid_argument("sma window must be >= 1");
  const Index n = prices.size();
  const Index w = spec.window;
  if (w > n) throw std::invalid_argument("window exceeds series");
  Eigen::ArrayXd out(n);
  for (Index t = w - 1; t < n; ++t) out[t] = prices.values().segment(t - w + 1, w).mean();
  return ValueSeries(std::move(out), w - 1);
}

ValueSeries ema(const PriceSeries& prices, const EmaSpec& spec) {
  if (spec.memory < 1) throw std::invalid_argument("ema memory must be >= 1");
  const Index n = prices.size();
  const double alpha = spec.alpha();
  Eigen::ArrayXd out(n);
  out[0] = prices[0];
  for (Index t = 1; t < n; ++t) out[t] = out[t - 1] + alpha * (prices[t] - out[t - 1]);
  return ValueSeries(std::move(out), 0);
}

MacdLines macd_lines(const PriceSeries& prices, const MacdSpec& spec) {
  if (spec.fast.memory >= spec.slow.memory)
    throw std::invalid_argument("macd fast memory must be < slow memory");
  return MacdLines{ema(prices, spec.fast), ema(prices, spec.slow)};
}

ValueSeries rsi(const PriceSeries& prices, const RsiSpec& spec) {
  if (spec.lookback < 1) throw std::invalid_argument("rsi lookback must be >= 1");
  const Index n = prices.size();
  const Index x = spec.lookback;
  if (n < x + 1) throw std::invalid_argument("series shorter than rsi lookback + 1");

  Eigen::ArrayXd delta = prices.values().tail(n - 1) - prices.values().head(n - 1);
  Eigen::ArrayXd gains = delta.max(0.0);
  Eigen::ArrayXd losses = (-delta).max(0.0);

  Eigen::ArrayXd out(n);
  for (Index t = x; t < n; ++t) {
    // delta[i] is the change into price i+1; the window of the x changes
    // ending at t starts at delta index t-x.
    const double mean_gain = gains.segment(t - x, x).mean();
    const double mean_loss = losses.segment(t - x, x).mean();
    if (mean_loss == 0.0)
      out[t] = mean_gain > 0.0 ? 100.0 : 50.0;
    else
      out[t] = 100.0 - 100.0 / (1.0 + mean_gain / mean_loss);
  }
  return ValueSeries(std::move(out), x);
}

}  // namespace talab
