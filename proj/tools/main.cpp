// talab command-line front end: world generation, single-run backtests,
// indicator dumps and the strategy x pattern x noise experiment grid.
//
// Exit codes: 0 success, 2 usage/spec error, 3 data error, 4 internal error.

#include <cstdint>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "talab/backtest.hpp"
#include "talab/csv.hpp"
#include "talab/datagen.hpp"
#include "talab/experiment.hpp"
#include "talab/report.hpp"
#include "talab/svg.hpp"

namespace {

using namespace talab;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t next = s.find(sep, pos);
    if (next == std::string::npos) {
      parts.push_back(s.substr(pos));
      break;
    }
    parts.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return parts;
}

double parse_double(const std::string& s, const std::string& what) {
  std::size_t consumed = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &consumed);
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid " + what + ": '" + s + "'");
  }
  if (consumed != s.size()) throw std::invalid_argument("invalid " + what + ": '" + s + "'");
  return v;
}

NoiseSpec parse_noise_token(const std::string& token) {
  const auto parts = split(token, ':');
  NoiseSpec noise;
  if (parts[0] == "none") {
    if (parts.size() != 1) throw std::invalid_argument("noise 'none' takes no parameters");
    return noise;
  }
  if (parts[0] == "simple") {
    if (parts.size() != 2) throw std::invalid_argument("expected simple:ALPHA");
    noise.kind = NoiseKind::Simple;
    noise.alpha = parse_double(parts[1], "alpha");
    return noise;
  }
  if (parts[0] == "energy") {
    if (parts.size() != 3) throw std::invalid_argument("expected energy:ALPHA:K");
    noise.kind = NoiseKind::Energy;
    noise.alpha = parse_double(parts[1], "alpha");
    noise.k = parse_double(parts[2], "k");
    return noise;
  }
  throw std::invalid_argument("unknown noise kind: '" + parts[0] + "'");
}

// ---------------------------------------------------------------------------
// generate
// ---------------------------------------------------------------------------

struct GenerateArgs {
  std::string kind = "trend";
  std::int64_t n = 1000;
  std::uint64_t seed = 0;
  double initial_price = 100.0;
  std::string noise_kind = "none";
  double alpha = 0.1;
  double k = 1.0;
  std::string segments;  // explicit layout: start:slope,... or start:amp:period,...
  int segments_min = 1, segments_max = 4;
  double slope_min = -0.5, slope_max = 0.5;
  double amp_min = 5.0, amp_max = 15.0;
  double period_min = 20.0, period_max = 120.0;
  std::int64_t min_segment_len = 20;
  std::string out;
};

GeneratorSpec spec_from_args(const GenerateArgs& a) {
  GeneratorSpec spec;
  spec.n = a.n;
  spec.seed = a.seed;
  spec.initial_price = a.initial_price;
  spec.noise.kind = a.noise_kind == "none"     ? NoiseKind::None
                    : a.noise_kind == "simple" ? NoiseKind::Simple
                    : a.noise_kind == "energy"
                        ? NoiseKind::Energy
                        : throw std::invalid_argument("unknown noise kind: " + a.noise_kind);
  spec.noise.alpha = a.alpha;
  spec.noise.k = a.k;

  const bool trend = a.kind == "trend";
  if (!trend && a.kind != "cycle")
    throw std::invalid_argument("unknown pattern kind: " + a.kind);

  if (!a.segments.empty()) {
    if (trend) {
      std::vector<TrendSegmentSpec> segs;
      for (const auto& tok : split(a.segments, ',')) {
        const auto f = split(tok, ':');
        if (f.size() != 2) throw std::invalid_argument("expected START:SLOPE, got '" + tok + "'");
        segs.push_back({parse_double(f[1], "slope"),
                        static_cast<Index>(parse_double(f[0], "start"))});
      }
      spec.layout = std::move(segs);
    } else {
      std::vector<CycleSegmentSpec> segs;
      for (const auto& tok : split(a.segments, ',')) {
        const auto f = split(tok, ':');
        if (f.size() != 3)
          throw std::invalid_argument("expected START:AMPLITUDE:PERIOD, got '" + tok + "'");
        const double period = parse_double(f[2], "period");
        if (!(period > 0.0)) throw std::invalid_argument("period must be > 0");
        segs.push_back({parse_double(f[1], "amplitude"), 2.0 * std::numbers::pi / period,
                        static_cast<Index>(parse_double(f[0], "start"))});
      }
      spec.layout = std::move(segs);
    }
  } else if (trend) {
    spec.layout = RandomTrendParams{a.segments_min, a.segments_max, a.slope_min, a.slope_max,
                                    a.min_segment_len};
  } else {
    spec.layout = RandomCycleParams{a.segments_min, a.segments_max, a.amp_min, a.amp_max,
                                    a.period_min, a.period_max, a.min_segment_len};
  }
  return spec;
}

int run_generate(const GenerateArgs& a) {
  const GeneratedWorld world = generate(spec_from_args(a));
  const nlohmann::json resolved = world_to_json(world);
  if (!a.out.empty())
    write_world_csv(a.out, world.clean, world.noisy, {"talab world", "spec: " + resolved.dump()});
  std::cout << resolved.dump(2) << '\n';
  if (world.clean_clamped || world.noisy_clamped)
    std::cerr << "warning: prices clamped at the " << format_number(kMinPrice) << " floor\n";
  return 0;
}

// ---------------------------------------------------------------------------
// backtest
// ---------------------------------------------------------------------------

struct BacktestArgs {
  std::string input;
  std::string column = "value";
  std::string strategy = "macd";
  std::int64_t fast = 9, slow = 50;
  std::int64_t lookback = 14;
  double buy = 30.0, sell = 70.0;
  double fee = 0.0;
  std::string report_path;
  std::string equity_csv;
  std::string indicators_csv;
  std::string svg_path;
};

int run_backtest_cmd(const BacktestArgs& a) {
  if (a.strategy != "macd" && a.strategy != "rsi" && a.strategy != "buyhold")
    throw std::invalid_argument("unknown strategy: " + a.strategy);
  const PriceSeries prices = read_price_csv(a.input, a.column);

  nlohmann::json config = {{"input", a.input}, {"column", a.column}, {"fee_rate", a.fee}};
  SignalSeries signals{{}, 0};
  std::optional<MacdLines> lines;
  std::optional<ValueSeries> rsi_values;

  if (a.strategy == "macd") {
    const MacdSpec spec{EmaSpec{a.fast}, EmaSpec{a.slow}};
    signals = macd_crossover_signals(prices, spec);
    lines = macd_lines(prices, spec);
    config["fast"] = a.fast;
    config["slow"] = a.slow;
  } else if (a.strategy == "rsi") {
    const RsiStrategyConfig cfg{RsiSpec{a.lookback}, a.buy, a.sell};
    signals = rsi_threshold_signals(prices, cfg);
    rsi_values = rsi(prices, cfg.lookback);
    config["lookback"] = a.lookback;
    config["buy_level"] = a.buy;
    config["sell_level"] = a.sell;
  } else {
    signals = buy_and_hold_signals(prices);
  }

  const BacktestReport report = compare_to_buyhold(prices, signals, a.fee, a.strategy);
  const nlohmann::json j = report_to_json(report, config);
  if (!a.report_path.empty()) write_json(a.report_path, j);
  std::cout << j.dump(2) << '\n';

  if (!a.equity_csv.empty()) write_curve_csv(a.equity_csv, report.equity);
  if (!a.indicators_csv.empty()) {
    std::vector<std::pair<std::string, const ValueSeries*>> cols;
    if (lines) {
      cols.emplace_back("ema_fast", &lines->fast);
      cols.emplace_back("ema_slow", &lines->slow);
    }
    if (rsi_values) cols.emplace_back("rsi", &*rsi_values);
    write_indicators_csv(a.indicators_csv, prices, cols);
  }
  if (!a.svg_path.empty()) {
    BacktestChart chart;
    chart.title = a.strategy + " on " + a.input;
    chart.prices = &prices;
    if (lines) {
      chart.price_overlays.push_back({"ema_fast", "#1f77b4", &lines->fast});
      chart.price_overlays.push_back({"ema_slow", "#d62728", &lines->slow});
    }
    if (rsi_values) {
      chart.oscillator = &*rsi_values;
      chart.oscillator_low = a.buy;
      chart.oscillator_high = a.sell;
      chart.oscillator_label = "rsi";
    }
    chart.equity = &report.equity;
    chart.trades = &report.trades;
    write_backtest_svg(a.svg_path, chart);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// indicators
// ---------------------------------------------------------------------------

struct IndicatorsArgs {
  std::string input;
  std::string column = "value";
  std::int64_t sma_window = 20;
  std::int64_t fast = 9, slow = 50;
  std::int64_t lookback = 14;
  std::string out;
};

int run_indicators(const IndicatorsArgs& a) {
  const PriceSeries prices = read_price_csv(a.input, a.column);
  const ValueSeries sma_line = sma(prices, SmaSpec{a.sma_window});
  const MacdLines lines = macd_lines(prices, MacdSpec{EmaSpec{a.fast}, EmaSpec{a.slow}});
  const ValueSeries rsi_line = rsi(prices, RsiSpec{a.lookback});
  write_indicators_csv(a.out, prices,
                       {{"sma", &sma_line},
                        {"ema_fast", &lines.fast},
                        {"ema_slow", &lines.slow},
                        {"rsi", &rsi_line}});
  return 0;
}

// ---------------------------------------------------------------------------
// experiment
// ---------------------------------------------------------------------------

struct ExperimentArgs {
  std::vector<std::string> strategies{"macd", "rsi", "buyhold"};
  std::vector<std::string> patterns{"trend", "cycle"};
  std::vector<std::string> noise{"none"};
  int seeds = 5;
  std::uint64_t base_seed = 42;
  std::int64_t n = 2000;
  double fee = 0.0;
  std::int64_t fast = 9, slow = 50;
  std::int64_t lookback = 14;
  double buy = 30.0, sell = 70.0;
  std::int64_t min_segment_len = 0;  // 0: per-cell default
  int jobs = 1;
  std::string rows_path;
  std::string summary_path;
  WorldRecipe worlds;
};

int run_experiment_cmd(const ExperimentArgs& a) {
  ExperimentGridSpec spec;
  spec.strategies.clear();
  for (const auto& s : a.strategies) {
    if (s == "macd")
      spec.strategies.push_back(StrategyKind::Macd);
    else if (s == "rsi")
      spec.strategies.push_back(StrategyKind::Rsi);
    else if (s == "buyhold")
      spec.strategies.push_back(StrategyKind::BuyHold);
    else
      throw std::invalid_argument("unknown strategy: " + s);
  }
  spec.patterns.clear();
  for (const auto& p : a.patterns) {
    if (p == "trend")
      spec.patterns.push_back(PatternKind::Trend);
    else if (p == "cycle")
      spec.patterns.push_back(PatternKind::Cycle);
    else if (p == "cycle_single_freq")
      spec.patterns.push_back(PatternKind::CycleSingleFreq);
    else
      throw std::invalid_argument("unknown pattern: " + p);
  }
  spec.noise_levels.clear();
  for (const auto& tok : a.noise) spec.noise_levels.push_back(parse_noise_token(tok));
  spec.seeds = a.seeds;
  spec.base_seed = a.base_seed;
  spec.n = a.n;
  spec.fee_rate = a.fee;
  spec.macd = MacdSpec{EmaSpec{a.fast}, EmaSpec{a.slow}};
  spec.rsi = RsiStrategyConfig{RsiSpec{a.lookback}, a.buy, a.sell};
  spec.jobs = a.jobs;
  spec.worlds = a.worlds;
  if (a.min_segment_len > 0) spec.worlds.min_segment_len = a.min_segment_len;

  const ExperimentResult result = run_experiment(spec);
  for (const auto& f : result.failures)
    std::cerr << "cell failed: " << f.strategy << '/' << f.pattern << '/' << f.noise << " run "
              << f.seed_index << ": " << f.message << '\n';

  char header[256];
  std::snprintf(header, sizeof(header), "base_seed=%llu seeds=%d n=%lld fee=%s",
                static_cast<unsigned long long>(spec.base_seed), spec.seeds,
                static_cast<long long>(spec.n), format_number(spec.fee_rate).c_str());
  if (!a.rows_path.empty()) write_rows_csv(a.rows_path, result.rows, {header});

  const auto cells = aggregate_rows(result.rows);
  if (!a.summary_path.empty()) write_aggregate_csv(a.summary_path, cells, {header});

  std::printf("%-8s %-18s %-8s %8s %6s %5s %14s %14s %9s\n", "strategy", "pattern", "noise",
              "alpha", "k", "runs", "median_return", "median_excess", "win_rate");
  for (const auto& c : cells)
    std::printf("%-8s %-18s %-8s %8g %6g %5d %14.4f %14.4f %9.2f\n", c.strategy.c_str(),
                c.pattern.c_str(), c.noise.c_str(), c.alpha, c.k, c.runs, c.median_return_pct,
                c.median_excess_pct, c.win_rate);
  if (result.rows.empty()) {
    std::cerr << "error: every grid run failed\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"talab: synthetic price worlds and technical-indicator strategy verification"};
  app.require_subcommand(1);
  app.set_config("--config", "", "read option defaults from an INI file");

  GenerateArgs gen;
  CLI::App* cmd_gen = app.add_subcommand("generate", "generate a synthetic price world");
  cmd_gen->add_option("--kind", gen.kind, "pattern kind: trend|cycle")->capture_default_str();
  cmd_gen->add_option("--n", gen.n, "series length")->capture_default_str();
  cmd_gen->add_option("--seed", gen.seed, "world seed")->capture_default_str();
  cmd_gen->add_option("--initial-price", gen.initial_price)->capture_default_str();
  cmd_gen->add_option("--noise", gen.noise_kind, "none|simple|energy")->capture_default_str();
  cmd_gen->add_option("--alpha", gen.alpha, "noise amplitude fraction")->capture_default_str();
  cmd_gen->add_option("--k", gen.k, "energy noise restoring strength")->capture_default_str();
  cmd_gen->add_option("--segments", gen.segments,
                      "explicit layout: START:SLOPE,... (trend) or START:AMP:PERIOD,... (cycle)");
  cmd_gen->add_option("--segments-min", gen.segments_min)->capture_default_str();
  cmd_gen->add_option("--segments-max", gen.segments_max)->capture_default_str();
  cmd_gen->add_option("--slope-min", gen.slope_min)->capture_default_str();
  cmd_gen->add_option("--slope-max", gen.slope_max)->capture_default_str();
  cmd_gen->add_option("--amp-min", gen.amp_min)->capture_default_str();
  cmd_gen->add_option("--amp-max", gen.amp_max)->capture_default_str();
  cmd_gen->add_option("--period-min", gen.period_min)->capture_default_str();
  cmd_gen->add_option("--period-max", gen.period_max)->capture_default_str();
  cmd_gen->add_option("--min-segment-len", gen.min_segment_len)->capture_default_str();
  cmd_gen->add_option("--out", gen.out, "world CSV path (t,clean,noisy)");

  BacktestArgs bt;
  CLI::App* cmd_bt = app.add_subcommand("backtest", "run one strategy against a price CSV");
  cmd_bt->add_option("--input", bt.input, "price CSV")->required();
  cmd_bt->add_option("--column", bt.column, "column to trade on")->capture_default_str();
  cmd_bt->add_option("--strategy", bt.strategy, "macd|rsi|buyhold")->capture_default_str();
  cmd_bt->add_option("--fast", bt.fast, "fast EMA memory")->capture_default_str();
  cmd_bt->add_option("--slow", bt.slow, "slow EMA memory")->capture_default_str();
  cmd_bt->add_option("--lookback", bt.lookback, "RSI lookback")->capture_default_str();
  cmd_bt->add_option("--buy", bt.buy, "RSI buy level")->capture_default_str();
  cmd_bt->add_option("--sell", bt.sell, "RSI sell level")->capture_default_str();
  cmd_bt->add_option("--fee", bt.fee, "fee as a fraction of traded value")->capture_default_str();
  cmd_bt->add_option("--report", bt.report_path, "JSON report path");
  cmd_bt->add_option("--equity-csv", bt.equity_csv);
  cmd_bt->add_option("--indicators-csv", bt.indicators_csv);
  cmd_bt->add_option("--svg", bt.svg_path, "chart path");

  IndicatorsArgs ind;
  CLI::App* cmd_ind = app.add_subcommand("indicators", "dump indicator columns for a series");
  cmd_ind->add_option("--input", ind.input)->required();
  cmd_ind->add_option("--column", ind.column)->capture_default_str();
  cmd_ind->add_option("--sma", ind.sma_window, "SMA window")->capture_default_str();
  cmd_ind->add_option("--fast", ind.fast)->capture_default_str();
  cmd_ind->add_option("--slow", ind.slow)->capture_default_str();
  cmd_ind->add_option("--rsi", ind.lookback)->capture_default_str();
  cmd_ind->add_option("--out", ind.out, "output CSV")->required();

  ExperimentArgs ex;
  CLI::App* cmd_ex = app.add_subcommand("experiment", "run the strategy/pattern/noise grid");
  cmd_ex->add_option("--strategies", ex.strategies, "subset of macd,rsi,buyhold")
      ->delimiter(',')
      ->capture_default_str();
  cmd_ex->add_option("--patterns", ex.patterns, "subset of trend,cycle,cycle_single_freq")
      ->delimiter(',')
      ->capture_default_str();
  cmd_ex->add_option("--noise", ex.noise, "list of none|simple:A|energy:A:K")
      ->delimiter(',')
      ->capture_default_str();
  cmd_ex->add_option("--seeds", ex.seeds, "runs per cell")->capture_default_str();
  cmd_ex->add_option("--base-seed", ex.base_seed)->capture_default_str();
  cmd_ex->add_option("--n", ex.n, "world length")->capture_default_str();
  cmd_ex->add_option("--fee", ex.fee)->capture_default_str();
  cmd_ex->add_option("--fast", ex.fast)->capture_default_str();
  cmd_ex->add_option("--slow", ex.slow)->capture_default_str();
  cmd_ex->add_option("--lookback", ex.lookback)->capture_default_str();
  cmd_ex->add_option("--buy", ex.buy)->capture_default_str();
  cmd_ex->add_option("--sell", ex.sell)->capture_default_str();
  cmd_ex->add_option("--min-segment-len", ex.min_segment_len,
                     "0 = per-cell default of 2*max(window, 10)")
      ->capture_default_str();
  cmd_ex->add_option("--jobs", ex.jobs, "parallel workers")->capture_default_str();
  cmd_ex->add_option("--rows", ex.rows_path, "per-run rows CSV");
  cmd_ex->add_option("--summary", ex.summary_path, "per-cell aggregate CSV");
  cmd_ex->add_option("--trend-segments-min", ex.worlds.trend_min_segments)->capture_default_str();
  cmd_ex->add_option("--trend-segments-max", ex.worlds.trend_max_segments)->capture_default_str();
  cmd_ex->add_option("--slope-min", ex.worlds.min_slope)->capture_default_str();
  cmd_ex->add_option("--slope-max", ex.worlds.max_slope)->capture_default_str();
  cmd_ex->add_option("--trend-initial", ex.worlds.trend_initial_price)->capture_default_str();
  cmd_ex->add_option("--cycle-segments-min", ex.worlds.cycle_min_segments)->capture_default_str();
  cmd_ex->add_option("--cycle-segments-max", ex.worlds.cycle_max_segments)->capture_default_str();
  cmd_ex->add_option("--amp-min", ex.worlds.cycle_min_amplitude)->capture_default_str();
  cmd_ex->add_option("--amp-max", ex.worlds.cycle_max_amplitude)->capture_default_str();
  cmd_ex->add_option("--period-min", ex.worlds.cycle_min_period)->capture_default_str();
  cmd_ex->add_option("--period-max", ex.worlds.cycle_max_period)->capture_default_str();
  cmd_ex->add_option("--cycle-initial", ex.worlds.cycle_initial_price)->capture_default_str();
  cmd_ex->add_option("--single-amp-min", ex.worlds.single_min_amplitude)->capture_default_str();
  cmd_ex->add_option("--single-amp-max", ex.worlds.single_max_amplitude)->capture_default_str();
  cmd_ex->add_option("--single-period-min", ex.worlds.single_min_period)->capture_default_str();
  cmd_ex->add_option("--single-period-max", ex.worlds.single_max_period)->capture_default_str();
  cmd_ex->add_option("--single-initial", ex.worlds.single_initial_price)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(cmd_gen)) return run_generate(gen);
    if (app.got_subcommand(cmd_bt)) return run_backtest_cmd(bt);
    if (app.got_subcommand(cmd_ind)) return run_indicators(ind);
    if (app.got_subcommand(cmd_ex)) return run_experiment_cmd(ex);
  } catch (const CsvError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
