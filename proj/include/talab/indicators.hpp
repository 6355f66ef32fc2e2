#pragma once

#include "talab/series.hpp"

// Moving-average and oscillator filters with explicit warm-up semantics.
// All operations are pure; windows are counted in steps ("days").

namespace talab {

struct SmaSpec {
  Index window = 1;  // tau >= 1
};

struct EmaSpec {
  Index memory = 1;  // N >= 1
  double alpha() const noexcept { return 2.0 / (static_cast<double>(memory) + 1.0); }
};

struct MacdSpec {
  EmaSpec fast{9};
  EmaSpec slow{50};
};

struct RsiSpec {
  Index lookback = 14;  // X >= 1
};

struct MacdLines {
  ValueSeries fast;
  ValueSeries slow;
};

// Arithmetic mean of the trailing window; defined from window-1 on.
// Throws std::invalid_argument ("window exceeds series") if window > length.
ValueSeries sma(const PriceSeries& prices, const SmaSpec& spec);

// EMA_t = EMA_{t-1} + alpha*(P_t - EMA_{t-1}) with alpha = 2/(N+1), seeded
// with EMA_0 = P_0 so every position is defined.
ValueSeries ema(const PriceSeries& prices, const EmaSpec& spec);

// The fast/slow EMA pair used by the crossover strategy. Requires
// fast.memory < slow.memory.
MacdLines macd_lines(const PriceSeries& prices, const MacdSpec& spec);

// RSI = 100 - 100/(1 + RS), RS = mean gains / mean losses over the trailing
// lookback one-step changes; defined from lookback on. All-gain windows read
// 100, all-flat windows read 50. Requires length >= lookback + 1.
ValueSeries rsi(const PriceSeries& prices, const RsiSpec& spec);

}  // namespace talab
