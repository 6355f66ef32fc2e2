#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "talab/backtest.hpp"
#include "talab/datagen.hpp"
#include "talab/strategies.hpp"

// The strategy x pattern x noise grid: every cell is run against `seeds`
// independently generated worlds, each strategy trading the noisy series and
// compared to buy-and-hold on the same series. Runs are embarrassingly
// parallel; results are identical whatever the schedule because every run
// derives its own seed from (base seed, cell key, run index).

namespace talab {

enum class StrategyKind { Macd, Rsi, BuyHold };
enum class PatternKind { Trend, Cycle, CycleSingleFreq };

const char* to_string(StrategyKind s) noexcept;
const char* to_string(PatternKind p) noexcept;
const char* to_string(NoiseKind k) noexcept;

// Parameter ranges for the random worlds backing each pattern.
struct WorldRecipe {
  int trend_min_segments = 4;
  int trend_max_segments = 8;
  double min_slope = -1.2;
  double max_slope = 1.2;
  double trend_initial_price = 500.0;

  int cycle_min_segments = 3;
  int cycle_max_segments = 6;
  double cycle_min_amplitude = 8.0;
  double cycle_max_amplitude = 25.0;
  double cycle_min_period = 20.0;
  double cycle_max_period = 120.0;
  double cycle_initial_price = 300.0;

  double single_min_amplitude = 8.0;
  double single_max_amplitude = 20.0;
  double single_min_period = 30.0;
  double single_max_period = 120.0;
  double single_initial_price = 100.0;

  // When unset, each cell uses 2 * max(its strategy's largest window, 10).
  std::optional<Index> min_segment_len;
};

struct ExperimentGridSpec {
  std::vector<StrategyKind> strategies{StrategyKind::Macd, StrategyKind::Rsi,
                                       StrategyKind::BuyHold};
  std::vector<PatternKind> patterns{PatternKind::Trend, PatternKind::Cycle};
  std::vector<NoiseSpec> noise_levels{NoiseSpec{}};
  int seeds = 5;
  std::uint64_t base_seed = 42;
  Index n = 2000;
  WorldRecipe worlds;
  MacdSpec macd;
  RsiStrategyConfig rsi;
  double fee_rate = 0.0;
  int jobs = 1;
};

struct GridResultRow {
  std::string strategy;
  std::string pattern;
  std::string noise;
  double alpha = 0.0;
  double k = 0.0;
  int seed_index = 0;
  std::uint64_t seed = 0;
  double total_return_pct = 0.0;
  double buyhold_return_pct = 0.0;
  double excess_pct = 0.0;
  Index trades_count = 0;
  double max_drawdown_pct = 0.0;
};

struct CellFailure {
  std::string strategy;
  std::string pattern;
  std::string noise;
  int seed_index = 0;
  std::string message;
};

struct AggregateRow {
  std::string strategy;
  std::string pattern;
  std::string noise;
  double alpha = 0.0;
  double k = 0.0;
  int runs = 0;
  double median_return_pct = 0.0;
  double median_excess_pct = 0.0;
  double win_rate = 0.0;  // fraction of runs strictly above buy-and-hold
};

struct ExperimentResult {
  std::vector<GridResultRow> rows;       // deterministic cell-major order
  std::vector<CellFailure> failures;     // failed runs, reported not fatal
};

// Canonical per-run seed: mix the base seed with the cell key string and the
// run index. Exposed so external harnesses can reproduce single runs.
std::uint64_t experiment_run_seed(std::uint64_t base_seed, const std::string& cell_key,
                                  int seed_index);

// The world spec a given cell generates for one run (noise and seed filled).
GeneratorSpec world_spec_for_cell(const ExperimentGridSpec& spec, StrategyKind strategy,
                                  PatternKind pattern, const NoiseSpec& noise,
                                  std::uint64_t run_seed);

ExperimentResult run_experiment(const ExperimentGridSpec& spec);

// Per-cell medians and win rate over the completed runs.
std::vector<AggregateRow> aggregate_rows(const std::vector<GridResultRow>& rows);

double median(std::vector<double> values);

}  // namespace talab
