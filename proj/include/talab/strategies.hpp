#pragma once

#include <vector>

#include "talab/indicators.hpp"
#include "talab/series.hpp"

// Strategies map a price series to a per-step desired position. Positions
// are binary (no shorting, no sizing); every strategy emits Flat before its
// warm-up index.

namespace talab {

enum class Signal : std::uint8_t { Flat = 0, Long = 1 };

struct SignalSeries {
  std::vector<Signal> signals;
  Index valid_from = 0;  // entries before this are Flat by construction

  Index size() const noexcept { return static_cast<Index>(signals.size()); }
  Signal operator[](Index t) const { return signals[static_cast<std::size_t>(t)]; }
};

struct RsiStrategyConfig {
  RsiSpec lookback{14};
  double buy_level = 30.0;   // enter Long when RSI drops strictly below
  double sell_level = 70.0;  // exit to Flat when RSI rises strictly above
};

// Long while the fast EMA is strictly above the slow EMA, Flat otherwise
// (ties are Flat). The first slow.memory steps are forced Flat: the seeded
// EMAs are defined there but still biased toward P0, and trading on that
// bias is an artifact, not a crossover.
SignalSeries macd_crossover_signals(const PriceSeries& prices, const MacdSpec& spec);

// Hysteresis rule on RSI: enter Long when RSI < buy_level while Flat, exit
// when RSI > sell_level while Long, otherwise hold the current state.
SignalSeries rsi_threshold_signals(const PriceSeries& prices, const RsiStrategyConfig& config);

// The same state machine applied to precomputed RSI values; exposed so the
// rule can be driven (and tested) independently of the filter.
SignalSeries rsi_signals_from_values(const ValueSeries& rsi_values,
                                     const RsiStrategyConfig& config);

// Long at every step; the baseline every strategy is compared against.
SignalSeries buy_and_hold_signals(const PriceSeries& prices);

}  // namespace talab
