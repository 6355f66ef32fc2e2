#include "talab/strategies.hpp"

#include <algorithm>
#include <stdexcept>

namespace talab {

SignalSeries macd_crossover_signals(const PriceSeries& prices, const MacdSpec& spec) {
  const MacdLines lines = macd_lines(prices, spec);
  const Index n = prices.size();
  const Index warmup = std::min(spec.slow.memory, n);
  SignalSeries out{std::vector<Signal>(static_cast<std::size_t>(n), Signal::Flat), warmup};
  for (Index t = warmup; t < n; ++t)
    out.signals[static_cast<std::size_t>(t)] =
        lines.fast.at(t) > lines.slow.at(t) ? Signal::Long : Signal::Flat;
  return out;
}

SignalSeries rsi_signals_from_values(const ValueSeries& rsi_values,
                                     const RsiStrategyConfig& config) {
  if (!(config.buy_level < config.sell_level))
    throw std::invalid_argument("rsi buy level must be below sell level");
  const Index n = rsi_values.size();
  SignalSeries out{std::vector<Signal>(static_cast<std::size_t>(n), Signal::Flat),
                   rsi_values.valid_from()};
  Signal state = Signal::Flat;
  for (Index t = rsi_values.valid_from(); t < n; ++t) {
    const double v = rsi_values.at(t);
    if (state == Signal::Flat && v < config.buy_level)
      state = Signal::Long;
    else if (state == Signal::Long && v > config.sell_level)
      state = Signal::Flat;
    out.signals[static_cast<std::size_t>(t)] = state;
  }
  return out;
}

SignalSeries rsi_threshold_signals(const PriceSeries& prices, const RsiStrategyConfig& config) {
  return rsi_signals_from_values(rsi(prices, config.lookback), config);
}

SignalSeries buy_and_hold_signals(const PriceSeries& prices) {
  return SignalSeries{std::vector<Signal>(static_cast<std::size_t>(prices.size()), Signal::Long),
                      0};
}

}  // namespace talab
