#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "talab/indicators.hpp"

using namespace talab;

namespace {

PriceSeries series(std::vector<double> v) { return PriceSeries::from_vector(v); }

}  // namespace

TEST_CASE("sma on constant and small series") {
  const auto flat = sma(series({5, 5, 5, 5}), SmaSpec{3});
  CHECK(flat.valid_from() == 2);
  CHECK(flat.at(2) == doctest::Approx(5.0));
  CHECK(flat.at(3) == doctest::Approx(5.0));

  const auto pairwise = sma(series({1, 2, 3, 4}), SmaSpec{2});
  CHECK(pairwise.valid_from() == 1);
  CHECK(pairwise.at(1) == doctest::Approx(1.5));
  CHECK(pairwise.at(2) == doctest::Approx(2.5));
  CHECK(pairwise.at(3) == doctest::Approx(3.5));
}

TEST_CASE("sma window must fit") {
  CHECK_THROWS_WITH_AS(sma(series({1, 2, 3}), SmaSpec{4}), "window exceeds series",
                       std::invalid_argument);
  CHECK_NOTHROW(sma(series({1, 2, 3}), SmaSpec{3}));
}

TEST_CASE("sma matches per-window summation oracle") {
  const auto p = oracle::random_prices(11, 1000);
  const auto got = sma(series(p), SmaSpec{20});
  const auto want = oracle::sma(p, 20);
  for (std::size_t t = 19; t < p.size(); ++t)
    CHECK(got.at(static_cast<Index>(t)) == doctest::Approx(want[t]).epsilon(1e-9));
}

TEST_CASE("ema spec alpha follows the memory parameter") {
  CHECK(EmaSpec{9}.alpha() == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(EmaSpec{1}.alpha() == doctest::Approx(1.0));
}

TEST_CASE("ema fixed point and single step") {
  const auto fixed = ema(series({7, 7, 7}), EmaSpec{9});
  CHECK(fixed.valid_from() == 0);
  for (Index t = 0; t < 3; ++t) CHECK(fixed.at(t) == doctest::Approx(7.0));

  const auto one = ema(series({10, 20}), EmaSpec{9});
  CHECK(one.at(0) == doctest::Approx(10.0));
  CHECK(one.at(1) == doctest::Approx(12.0));  // 10 + 0.2*(20-10)
}

TEST_CASE("ema matches closed-form expansion oracle") {
  const auto p = oracle::random_prices(77, 500);
  for (const Index memory : {9, 50}) {
    const auto got = ema(series(p), EmaSpec{memory});
    const auto want = oracle::ema_closed_form(p, static_cast<int>(memory));
    for (std::size_t t = 0; t < p.size(); ++t)
      CHECK(got.at(static_cast<Index>(t)) == doctest::Approx(want[t]).epsilon(1e-9));
  }
}

TEST_CASE("ema stays within the running price envelope") {
  const auto p = oracle::random_prices(31, 400);
  const auto line = ema(series(p), EmaSpec{14});
  double lo = p[0], hi = p[0];
  for (std::size_t t = 0; t < p.size(); ++t) {
    lo = std::min(lo, p[t]);
    hi = std::max(hi, p[t]);
    CHECK(line.at(static_cast<Index>(t)) >= lo - 1e-12);
    CHECK(line.at(static_cast<Index>(t)) <= hi + 1e-12);
  }
}

TEST_CASE("macd lines are seeded EMAs") {
  const auto p = oracle::random_prices(5, 300);
  const auto lines = macd_lines(series(p), MacdSpec{EmaSpec{9}, EmaSpec{50}});
  CHECK(lines.fast.valid_from() == 0);
  CHECK(lines.slow.valid_from() == 0);
  CHECK_THROWS_AS(macd_lines(series(p), MacdSpec{EmaSpec{50}, EmaSpec{9}}),
                  std::invalid_argument);
}

TEST_CASE("macd on a rising line: fast settles above slow") {
  std::vector<double> p(1000);
  for (std::size_t t = 0; t < p.size(); ++t) p[t] = 100.0 + static_cast<double>(t);
  const auto lines = macd_lines(series(p), MacdSpec{EmaSpec{9}, EmaSpec{50}});
  for (Index t = 150; t < 1000; ++t) CHECK(lines.fast.at(t) > lines.slow.at(t));
}

TEST_CASE("macd on constant prices: lines coincide") {
  const auto lines = macd_lines(series(std::vector<double>(80, 42.0)),
                                MacdSpec{EmaSpec{9}, EmaSpec{50}});
  for (Index t = 0; t < 80; ++t)
    CHECK(lines.fast.at(t) == doctest::Approx(lines.slow.at(t)).epsilon(1e-15));
}

TEST_CASE("rsi degenerate windows") {
  std::vector<double> rising(15);
  for (std::size_t t = 0; t < rising.size(); ++t) rising[t] = 1.0 + static_cast<double>(t);
  const auto all_gains = rsi(series(rising), RsiSpec{14});
  CHECK(all_gains.valid_from() == 14);
  CHECK(all_gains.at(14) == doctest::Approx(100.0));

  std::vector<double> zigzag(21);
  zigzag[0] = 100.0;
  for (std::size_t t = 1; t < zigzag.size(); ++t)
    zigzag[t] = zigzag[t - 1] + (t % 2 == 1 ? 1.0 : -1.0);
  const auto balanced = rsi(series(zigzag), RsiSpec{14});
  for (Index t = 14; t < 21; ++t) CHECK(balanced.at(t) == doctest::Approx(50.0));

  const auto flat = rsi(series(std::vector<double>(10, 3.0)), RsiSpec{4});
  CHECK(flat.at(5) == doctest::Approx(50.0));
}

TEST_CASE("rsi needs lookback+1 points") {
  CHECK_THROWS_AS(rsi(series({1, 2, 3}), RsiSpec{3}), std::invalid_argument);
  CHECK_NOTHROW(rsi(series({1, 2, 3, 4}), RsiSpec{3}));
}

TEST_CASE("rsi matches per-window oracle") {
  const auto p = oracle::random_prices(13, 1000);
  const auto got = rsi(series(p), RsiSpec{14});
  const auto want = oracle::rsi(p, 14);
  for (std::size_t t = 14; t < p.size(); ++t)
    CHECK(got.at(static_cast<Index>(t)) == doctest::Approx(want[t]).epsilon(1e-9));
}

TEST_CASE("rsi stays in [0, 100]") {
  const auto p = oracle::random_prices(17, 600);
  const auto line = rsi(series(p), RsiSpec{14});
  for (Index t = 14; t < line.size(); ++t) {
    CHECK(line.at(t) >= 0.0);
    CHECK(line.at(t) <= 100.0);
  }
}

TEST_CASE("rsi of the mirrored walk is 100 minus rsi") {
  // Reflect the walk around a large base so both series stay positive and
  // every one-step move is the exact negation of the original.
  Rng rng(404);
  std::vector<double> up(300), down(300);
  up[0] = 10000.0;
  for (std::size_t t = 1; t < up.size(); ++t) up[t] = up[t - 1] + rng.uniform(-3.0, 3.0);
  for (std::size_t t = 0; t < up.size(); ++t) down[t] = 20000.0 - up[t];
  const auto a = rsi(series(up), RsiSpec{14});
  const auto b = rsi(series(down), RsiSpec{14});
  for (Index t = 14; t < 300; ++t)
    CHECK(a.at(t) + b.at(t) == doctest::Approx(100.0).epsilon(1e-9));
}

TEST_CASE("prepending constant history shifts outputs without changing them") {
  const auto p = oracle::random_prices(313, 200);
  std::vector<double> padded(p.size() + 5, p[0]);
  std::copy(p.begin(), p.end(), padded.begin() + 5);

  const auto s1 = sma(series(p), SmaSpec{10});
  const auto s2 = sma(series(padded), SmaSpec{10});
  const auto e1 = ema(series(p), EmaSpec{9});
  const auto e2 = ema(series(padded), EmaSpec{9});
  const auto r1 = rsi(series(p), RsiSpec{14});
  const auto r2 = rsi(series(padded), RsiSpec{14});
  for (Index t = 0; t < static_cast<Index>(p.size()); ++t) {
    if (t >= s1.valid_from()) CHECK(s2.at(t + 5) == doctest::Approx(s1.at(t)).epsilon(1e-12));
    if (t >= e1.valid_from()) CHECK(e2.at(t + 5) == doctest::Approx(e1.at(t)).epsilon(1e-12));
    if (t >= r1.valid_from()) CHECK(r2.at(t + 5) == doctest::Approx(r1.at(t)).epsilon(1e-12));
  }
}

TEST_CASE("positive scaling: sma/ema scale, rsi is invariant") {
  const double lambda = 3.7;
  const auto p = oracle::random_prices(218, 250);
  std::vector<double> scaled(p.size());
  std::transform(p.begin(), p.end(), scaled.begin(), [&](double v) { return lambda * v; });

  const auto s1 = sma(series(p), SmaSpec{12});
  const auto s2 = sma(series(scaled), SmaSpec{12});
  const auto e1 = ema(series(p), EmaSpec{9});
  const auto e2 = ema(series(scaled), EmaSpec{9});
  const auto r1 = rsi(series(p), RsiSpec{14});
  const auto r2 = rsi(series(scaled), RsiSpec{14});
  for (Index t = 14; t < static_cast<Index>(p.size()); ++t) {
    CHECK(s2.at(t) == doctest::Approx(lambda * s1.at(t)).epsilon(1e-9));
    CHECK(e2.at(t) == doctest::Approx(lambda * e1.at(t)).epsilon(1e-9));
    CHECK(r2.at(t) == doctest::Approx(r1.at(t)).epsilon(1e-9));
  }
}
