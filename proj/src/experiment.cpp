#include "talab/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "talab/rng.hpp"

namespace talab {

const char* to_string(StrategyKind s) noexcept {
  switch (s) {
    case StrategyKind::Macd: return "macd";
    case StrategyKind::Rsi: return "rsi";
    case StrategyKind::BuyHold: return "buyhold";
  }
  return "?";
}

const char* to_string(PatternKind p) noexcept {
  switch (p) {
    case PatternKind::Trend: return "trend";
    case PatternKind::Cycle: return "cycle";
    case PatternKind::CycleSingleFreq: return "cycle_single_freq";
  }
  return "?";
}

const char* to_string(NoiseKind k) noexcept {
  switch (k) {
    case NoiseKind::None: return "none";
    case NoiseKind::Simple: return "simple";
    case NoiseKind::Energy: return "energy";
  }
  return "?";
}

std::uint64_t experiment_run_seed(std::uint64_t base_seed, const std::string& cell_key,
                                  int seed_index) {
  const std::uint64_t cell_seed = child_seed(base_seed, fnv1a64(cell_key.data(), cell_key.size()));
  return child_seed(cell_seed, static_cast<std::uint64_t>(seed_index));
}

namespace {

std::string cell_key(StrategyKind s, PatternKind p, const NoiseSpec& noise) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%s|%s|%s|%.17g|%.17g", to_string(s), to_string(p),
                to_string(noise.kind), noise.alpha, noise.kind == NoiseKind::Energy ? noise.k : 0.0);
  return buf;
}

Index largest_window(const ExperimentGridSpec& spec, StrategyKind s) {
  switch (s) {
    case StrategyKind::Macd: return spec.macd.slow.memory;
    case StrategyKind::Rsi: return spec.rsi.lookback.lookback;
    case StrategyKind::BuyHold: return 0;
  }
  return 0;
}

SignalSeries signals_for(const ExperimentGridSpec& spec, StrategyKind s,
                         const PriceSeries& prices) {
  switch (s) {
    case StrategyKind::Macd: return macd_crossover_signals(prices, spec.macd);
    case StrategyKind::Rsi: return rsi_threshold_signals(prices, spec.rsi);
    case StrategyKind::BuyHold: return buy_and_hold_signals(prices);
  }
  throw std::logic_error("unknown strategy");
}

}  // namespace

GeneratorSpec world_spec_for_cell(const ExperimentGridSpec& spec, StrategyKind strategy,
                                  PatternKind pattern, const NoiseSpec& noise,
                                  std::uint64_t run_seed) {
  const Index min_len = spec.worlds.min_segment_len.value_or(
      2 * std::max<Index>(largest_window(spec, strategy), 10));
  GeneratorSpec world;
  world.n = spec.n;
  world.seed = run_seed;
  world.noise = noise;
  const WorldRecipe& w = spec.worlds;
  switch (pattern) {
    case PatternKind::Trend:
      world.initial_price = w.trend_initial_price;
      world.layout = RandomTrendParams{w.trend_min_segments, w.trend_max_segments, w.min_slope,
                                       w.max_slope, min_len};
      break;
    case PatternKind::Cycle:
      world.initial_price = w.cycle_initial_price;
      world.layout =
          RandomCycleParams{w.cycle_min_segments, w.cycle_max_segments, w.cycle_min_amplitude,
                            w.cycle_max_amplitude, w.cycle_min_period, w.cycle_max_period, min_len};
      break;
    case PatternKind::CycleSingleFreq:
      world.initial_price = w.single_initial_price;
      world.layout = RandomCycleParams{1, 1, w.single_min_amplitude, w.single_max_amplitude,
                                       w.single_min_period, w.single_max_period, min_len};
      break;
  }
  return world;
}

ExperimentResult run_experiment(const ExperimentGridSpec& spec) {
  if (spec.strategies.empty() || spec.patterns.empty() || spec.noise_levels.empty())
    throw std::invalid_argument("experiment grid must be non-empty on every axis");
  if (spec.seeds < 1) throw std::invalid_argument("experiment needs at least one seed");

  struct Task {
    StrategyKind strategy;
    PatternKind pattern;
    NoiseSpec noise;
    int seed_index;
  };
  std::vector<Task> tasks;
  for (StrategyKind s : spec.strategies)
    for (PatternKind p : spec.patterns)
      for (const NoiseSpec& noise : spec.noise_levels)
        for (int i = 0; i < spec.seeds; ++i) tasks.push_back(Task{s, p, noise, i});

  std::vector<std::optional<GridResultRow>> slots(tasks.size());
  std::vector<std::optional<CellFailure>> failures(tasks.size());

  auto run_task = [&](std::size_t idx) {
    const Task& task = tasks[idx];
    const std::string key = cell_key(task.strategy, task.pattern, task.noise);
    const std::uint64_t run_seed =
        experiment_run_seed(spec.base_seed, key, task.seed_index);
    try {
      const GeneratorSpec world_spec =
          world_spec_for_cell(spec, task.strategy, task.pattern, task.noise, run_seed);
      const GeneratedWorld world = generate(world_spec);
      const SignalSeries signals = signals_for(spec, task.strategy, world.noisy);
      const BacktestReport report = compare_to_buyhold(world.noisy, signals, spec.fee_rate,
                                                       to_string(task.strategy));
      GridResultRow row;
      row.strategy = to_string(task.strategy);
      row.pattern = to_string(task.pattern);
      row.noise = to_string(task.noise.kind);
      row.alpha = task.noise.alpha;
      row.k = task.noise.kind == NoiseKind::Energy ? task.noise.k : 0.0;
      row.seed_index = task.seed_index;
      row.seed = run_seed;
      row.total_return_pct = report.total_return_pct;
      row.buyhold_return_pct = *report.buyhold_return_pct;
      row.excess_pct = *report.excess_over_buyhold_pct;
      row.trades_count = static_cast<Index>(report.trades.size());
      row.max_drawdown_pct = report.metrics.max_drawdown_pct;
      slots[idx] = std::move(row);
    } catch (const std::exception& e) {
      failures[idx] = CellFailure{to_string(task.strategy), to_string(task.pattern),
                                  to_string(task.noise.kind), task.seed_index, e.what()};
    }
  };

  const int jobs = std::max(1, spec.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) run_task(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(jobs));
    for (int j = 0; j < jobs; ++j)
      workers.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
          run_task(i);
      });
    for (auto& w : workers) w.join();
  }

  ExperimentResult result;
  for (auto& slot : slots)
    if (slot) result.rows.push_back(std::move(*slot));
  for (auto& f : failures)
    if (f) result.failures.push_back(std::move(*f));
  return result;
}

double median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of empty set");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

std::vector<AggregateRow> aggregate_rows(const std::vector<GridResultRow>& rows) {
  std::vector<AggregateRow> out;
  auto find_cell = [&](const GridResultRow& r) -> AggregateRow* {
    for (auto& a : out)
      if (a.strategy == r.strategy && a.pattern == r.pattern && a.noise == r.noise &&
          a.alpha == r.alpha && a.k == r.k)
        return &a;
    return nullptr;
  };

  // First pass fixes cell order to first appearance; second pass fills stats.
  for (const auto& r : rows) {
    if (!find_cell(r))
      out.push_back(AggregateRow{r.strategy, r.pattern, r.noise, r.alpha, r.k, 0, 0.0, 0.0, 0.0});
  }
  for (auto& cell : out) {
    std::vector<double> returns;
    std::vector<double> excess;
    int wins = 0;
    for (const auto& r : rows) {
      if (r.strategy != cell.strategy || r.pattern != cell.pattern || r.noise != cell.noise ||
          r.alpha != cell.alpha || r.k != cell.k)
        continue;
      returns.push_back(r.total_return_pct);
      excess.push_back(r.excess_pct);
      if (r.total_return_pct > r.buyhold_return_pct) ++wins;
    }
    cell.runs = static_cast<int>(returns.size());
    cell.median_return_pct = median(returns);
    cell.median_excess_pct = median(excess);
    cell.win_rate = static_cast<double>(wins) / static_cast<double>(cell.runs);
  }
  return out;
}

}  // namespace talab
