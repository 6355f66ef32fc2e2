#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "talab/backtest.hpp"
#include "talab/datagen.hpp"

using namespace talab;

namespace {

PriceSeries series(std::vector<double> v) { return PriceSeries::from_vector(v); }

SignalSeries signals_from(const std::vector<int>& longs, Index valid_from = 0) {
  SignalSeries s{std::vector<Signal>(longs.size(), Signal::Flat), valid_from};
  for (std::size_t t = 0; t < longs.size(); ++t)
    if (longs[t]) s.signals[t] = Signal::Long;
  return s;
}

}  // namespace

TEST_CASE("buy and hold captures the full move") {
  std::vector<double> p;
  for (int t = 0; t <= 100; ++t) p.push_back(100.0 + t);  // 100 -> 200
  const auto prices = series(p);
  const auto report = run_backtest(prices, buy_and_hold_signals(prices), 0.0, "buyhold");
  CHECK(report.total_return_pct == doctest::Approx(100.0).epsilon(1e-12));
  CHECK(report.equity[0] == 1.0);
  CHECK(report.trades.size() == 1);
  CHECK(!report.trades[0].exit_index.has_value());
}

TEST_CASE("all-flat signals do nothing") {
  const auto p = oracle::random_prices(6, 100);
  const auto prices = series(p);
  const auto report = run_backtest(prices, signals_from(std::vector<int>(100, 0)), 0.0);
  CHECK(report.total_return_pct == 0.0);
  CHECK(report.trades.empty());
  for (Index t = 0; t < 100; ++t) CHECK(report.equity[t] == 1.0);
}

TEST_CASE("scripted round trip: buy at 10, sell at 15") {
  const auto prices = series({9.0, 10.0, 12.0, 15.0, 14.0});
  const auto report = run_backtest(prices, signals_from({0, 1, 1, 0, 0}), 0.0);
  CHECK(report.equity[0] == doctest::Approx(1.0));
  CHECK(report.equity[1] == doctest::Approx(1.0));
  CHECK(report.equity[2] == doctest::Approx(1.2).epsilon(1e-12));
  CHECK(report.equity[3] == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(report.equity[4] == doctest::Approx(1.5).epsilon(1e-12));
  REQUIRE(report.trades.size() == 1);
  const Trade& t = report.trades[0];
  CHECK(t.entry_index == 1);
  CHECK(t.entry_price == 10.0);
  REQUIRE(t.exit_index.has_value());
  CHECK(*t.exit_index == 3);
  CHECK(t.exit_price == 15.0);
  CHECK(t.trade_return == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("input validation") {
  const auto prices = series({1, 2, 3});
  CHECK_THROWS_WITH_AS(run_backtest(prices, signals_from({1, 1}), 0.0), "length mismatch",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(run_backtest(prices, signals_from({1, 1, 1}), 0.2), "fee out of range",
                       std::invalid_argument);
  CHECK_THROWS_AS(run_backtest(prices, signals_from({1, 1, 1}), -0.01), std::invalid_argument);
}

TEST_CASE("comparison against buy and hold") {
  const auto p = oracle::random_prices(44, 200);
  const auto prices = series(p);

  const auto same = compare_to_buyhold(prices, buy_and_hold_signals(prices), 0.0);
  CHECK(*same.excess_over_buyhold_pct == 0.0);

  std::vector<double> rising;
  for (int t = 0; t < 50; ++t) rising.push_back(10.0 + t);
  const auto flat_report =
      compare_to_buyhold(series(rising), signals_from(std::vector<int>(50, 0)), 0.0);
  CHECK(flat_report.total_return_pct == 0.0);
  CHECK(*flat_report.excess_over_buyhold_pct ==
        doctest::Approx(-*flat_report.buyhold_return_pct).epsilon(1e-12));
}

TEST_CASE("avoiding the down segment beats buy and hold") {
  // Piecewise trend with a known down segment; the oracle signal sits out
  // exactly that stretch.
  const std::vector<TrendSegmentSpec> segs{{1.0, 0}, {-1.0, 100}, {1.0, 200}};
  const auto prices = gen_trend(segs, 300, 100.0);
  std::vector<int> longs(300, 1);
  for (int t = 100; t < 200; ++t) longs[static_cast<std::size_t>(t)] = 0;
  const auto report = compare_to_buyhold(prices, signals_from(longs), 0.0);
  CHECK(*report.excess_over_buyhold_pct > 0.0);
}

TEST_CASE("zero-fee equity decomposes into held-step price relatives") {
  Rng rng(31415);
  for (int rep = 0; rep < 10; ++rep) {
    const auto p = oracle::random_prices(1000 + static_cast<std::uint64_t>(rep), 300);
    std::vector<int> longs(300, 0);
    int state = 0;
    for (auto& v : longs) {
      if (rng.uniform01() < 0.05) state = 1 - state;
      v = state;
    }
    const auto report = run_backtest(series(p), signals_from(longs), 0.0);

    double product = 1.0;
    for (std::size_t t = 1; t < p.size(); ++t)
      if (longs[t - 1] == 1) product *= p[t] / p[t - 1];
    CHECK(report.equity.final_value() == doctest::Approx(product).epsilon(1e-9));
  }
}

TEST_CASE("flat steps never change equity at zero fee") {
  const auto p = oracle::random_prices(5150, 400);
  std::vector<int> longs(400, 0);
  for (std::size_t t = 100; t < 250; ++t) longs[t] = 1;
  const auto report = run_backtest(series(p), signals_from(longs), 0.0);
  for (Index t = 1; t < 400; ++t)
    if (longs[static_cast<std::size_t>(t - 1)] == 0)
      CHECK(report.equity[t] == doctest::Approx(report.equity[t - 1]).epsilon(1e-15));
}

TEST_CASE("total return is non-increasing in the fee") {
  const auto p = oracle::random_prices(777, 500);
  std::vector<int> longs(500, 0);
  Rng rng(9);
  int state = 0;
  for (auto& v : longs) {
    if (rng.uniform01() < 0.04) state = 1 - state;
    v = state;
  }
  double prev = 1e300;
  for (const double fee : {0.0, 0.001, 0.01, 0.05, 0.1}) {
    const auto report = run_backtest(series(p), signals_from(longs), fee);
    CHECK(report.total_return_pct <= prev + 1e-12);
    prev = report.total_return_pct;
  }
}

TEST_CASE("no look-ahead: truncation preserves the equity prefix") {
  const auto p = oracle::random_prices(2222, 400, 100.0, 0.02);
  const auto prices = series(p);
  const auto full_signals = macd_crossover_signals(prices, MacdSpec{});
  const auto full = run_backtest(prices, full_signals, 0.0);

  for (const std::size_t cut : {60u, 150u, 399u}) {
    const std::vector<double> head(p.begin(), p.begin() + static_cast<long>(cut) + 1);
    const auto trunc_prices = series(head);
    const auto trunc = run_backtest(trunc_prices, macd_crossover_signals(trunc_prices, MacdSpec{}),
                                    0.0);
    for (std::size_t t = 0; t <= cut; ++t)
      CHECK(trunc.equity[static_cast<Index>(t)] == full.equity[static_cast<Index>(t)]);
  }
}

TEST_CASE("randomized scenarios agree with the brute-force ledger") {
  Rng rng(60601);
  for (int scenario = 0; scenario < 20; ++scenario) {
    const std::size_t n = 50 + static_cast<std::size_t>(rng.uniform_int(0, 200));
    const auto p = oracle::random_prices(90000 + static_cast<std::uint64_t>(scenario), n);
    std::vector<int> longs(n, 0);
    const auto vf = static_cast<std::size_t>(rng.uniform_int(0, 20));
    int state = 0;
    for (std::size_t t = vf; t < n; ++t) {
      if (rng.uniform01() < 0.1) state = 1 - state;
      longs[t] = state;
    }
    const double fee = scenario % 2 == 0 ? 0.0 : 0.005;

    const auto report =
        run_backtest(series(p), signals_from(longs, static_cast<Index>(vf)), fee);
    const auto replay = oracle::ledger(p, longs, fee);
    for (std::size_t t = 0; t < n; ++t)
      CHECK(report.equity[static_cast<Index>(t)] ==
            doctest::Approx(replay.equity[t]).epsilon(1e-12));
    CHECK(static_cast<int>(report.trades.size()) == replay.entries);
  }
}

TEST_CASE("fee accounting on a single round trip") {
  const auto prices = series({10.0, 10.0, 10.0});
  const double fee = 0.01;
  const auto report = run_backtest(prices, signals_from({1, 1, 0}), fee);
  // Flat prices: the round trip costs both fees and nothing else.
  const double expected = (1.0 / (1.0 + fee)) * (1.0 - fee);
  CHECK(report.equity.final_value() == doctest::Approx(expected).epsilon(1e-12));
}
