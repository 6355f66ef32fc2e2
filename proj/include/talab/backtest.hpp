#pragma once

#include <optional>
#include <string>
#include <vector>

#include "talab/backtest_types.hpp"
#include "talab/metrics.hpp"
#include "talab/strategies.hpp"

// Signal replay through a cash/shares ledger. Fills happen at the same
// step's price as the signal (one price per step; indicators at t use no
// future prices, so causality is preserved). Fractional shares; an open
// position at the end is marked to market, never force-closed.

namespace talab {

struct BacktestReport {
  std::string strategy;  // name plus a short config echo
  std::vector<Trade> trades;
  EquityCurve equity;
  double total_return_pct = 0.0;
  std::optional<double> buyhold_return_pct;        // filled by compare_to_buyhold
  std::optional<double> excess_over_buyhold_pct;   // total - buyhold
  double fee_rate = 0.0;
  MetricsSummary metrics;
};

// Ledger semantics: start with cash 1.0 and no shares. A Flat->Long flip
// buys all-in at prices[t] (fee_rate of traded value charged on top); a
// Long->Flat flip sells everything at prices[t] (fee taken from proceeds).
// equity[0] is the unit starting capital; from t >= 1 equity marks cash plus
// holdings at prices[t] after the step's trade. Throws std::invalid_argument
// on length mismatch or fee_rate outside [0, 0.1].
BacktestReport run_backtest(const PriceSeries& prices, const SignalSeries& signals,
                            double fee_rate, std::string strategy_name = "strategy");

// run_backtest for the given signals plus the buy-and-hold baseline on the
// same prices and fee, with the comparison fields filled in.
BacktestReport compare_to_buyhold(const PriceSeries& prices, const SignalSeries& signals,
                                  double fee_rate, std::string strategy_name = "strategy");

}  // namespace talab
