#include "talab/backtest.hpp"

#include <stdexcept>

namespace talab {

BacktestReport run_backtest(const PriceSeries& prices, const SignalSeries& signals,
                            double fee_rate, std::string strategy_name) {
  const Index n = prices.size();
  if (signals.size() != n) throw std::invalid_argument("length mismatch");
  if (!(fee_rate >= 0.0 && fee_rate <= 0.1)) throw std::invalid_argument("fee out of range");

  Eigen::ArrayXd equity(n);
  std::vector<Trade> trades;
  double cash = 1.0;
  double shares = 0.0;

  for (Index t = 0; t < n; ++t) {
    const bool want_long = signals[t] == Signal::Long;
    const double p = prices[t];
    if (t == 0) equity[0] = 1.0;  // capital before the first fill
    if (want_long && shares == 0.0) {
      // All-in: traded value V satisfies V + fee*V = cash.
      shares = cash / (p * (1.0 + fee_rate));
      cash = 0.0;
      trades.push_back(Trade{t, p, std::nullopt, p, 0.0});
    } else if (!want_long && shares > 0.0) {
      cash = shares * p * (1.0 - fee_rate);
      shares = 0.0;
      Trade& open = trades.back();
      open.exit_index = t;
      open.exit_price = p;
      open.trade_return = p / open.entry_price - 1.0;
    }
    if (t > 0) equity[t] = cash + shares * p;
  }
  if (shares > 0.0) {  // open position: mark to the last price
    Trade& open = trades.back();
    open.exit_price = prices[n - 1];
    open.trade_return = open.exit_price / open.entry_price - 1.0;
  }

  BacktestReport report{std::move(strategy_name),
                        std::move(trades),
                        EquityCurve(std::move(equity)),
                        0.0,
                        std::nullopt,
                        std::nullopt,
                        fee_rate,
                        MetricsSummary{}};
  report.total_return_pct = (report.equity.final_value() - 1.0) * 100.0;
  if (n >= 2) report.metrics = summarize(report.equity, report.trades);
  return report;
}

BacktestReport compare_to_buyhold(const PriceSeries& prices, const SignalSeries& signals,
                                  double fee_rate, std::string strategy_name) {
  BacktestReport report = run_backtest(prices, signals, fee_rate, std::move(strategy_name));
  const BacktestReport baseline =
      run_backtest(prices, buy_and_hold_signals(prices), fee_rate, "buyhold");
  report.buyhold_return_pct = baseline.total_return_pct;
  report.excess_over_buyhold_pct = report.total_return_pct - baseline.total_return_pct;
  return report;
}

}  // namespace talab
