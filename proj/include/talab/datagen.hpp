#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "talab/series.hpp"

// Synthetic price worlds: piecewise-linear trends and piecewise sinusoids
// whose parameters change at segment boundaries while the level stays
// continuous, plus two noise overlays. Everything is a pure function of the
// spec, including its seed.

namespace talab {

// Prices never go below this floor. Trend generation and noise clamp to it
// (and flag the clamp); a cycle whose band would cross it is a spec error.
inline constexpr double kMinPrice = 0.01;

// Stream labels for child_seed derivation inside generate().
inline constexpr std::uint64_t kStreamSegments = 1;
inline constexpr std::uint64_t kStreamNoise = 2;

struct TrendSegmentSpec {
  double slope = 0.0;  // price units per step
  Index start = 0;     // first index covered by this segment
};

struct CycleSegmentSpec {
  double amplitude = 0.0;     // price units, >= 0
  double angular_freq = 0.0;  // radians per step, > 0
  Index start = 0;
};

enum class NoiseKind { None, Simple, Energy };

struct NoiseSpec {
  NoiseKind kind = NoiseKind::None;
  double alpha = 0.0;  // amplitude as a fraction, in [0, 0.5]
  double k = 1.0;      // restoring strength, in (0, 4]; Energy only
};

// Random-layout parameters. Segment boundaries are drawn uniformly without
// replacement from interior indices, rejecting draws that leave any segment
// shorter than min_segment_len.
struct RandomTrendParams {
  int min_segments = 1;
  int max_segments = 1;
  double min_slope = 0.0;
  double max_slope = 0.0;
  Index min_segment_len = 20;
};

struct RandomCycleParams {
  int min_segments = 1;
  int max_segments = 1;
  double min_amplitude = 0.0;
  double max_amplitude = 0.0;
  double min_period = 2.0;  // steps per full cycle; angular_freq = 2*pi/period
  double max_period = 2.0;
  Index min_segment_len = 20;
};

// Full recipe for one synthetic world. The layout is either an explicit
// segment list or random-layout parameters; the pattern kind follows from
// the alternative held.
struct GeneratorSpec {
  using Layout = std::variant<std::vector<TrendSegmentSpec>, std::vector<CycleSegmentSpec>,
                              RandomTrendParams, RandomCycleParams>;

  Index n = 0;
  double initial_price = 100.0;
  std::uint64_t seed = 0;
  NoiseSpec noise;
  Layout layout;

  bool is_trend() const noexcept { return layout.index() == 0 || layout.index() == 2; }
  bool is_random() const noexcept { return layout.index() >= 2; }
};

struct GeneratedWorld {
  GeneratorSpec spec;  // the spec as given
  // Resolved layout (sampled when the spec was random); one list is empty.
  std::vector<TrendSegmentSpec> trend_segments;
  std::vector<CycleSegmentSpec> cycle_segments;
  PriceSeries clean;
  PriceSeries noisy;  // equals clean when noise kind is None
  bool clean_clamped = false;
  bool noisy_clamped = false;
};

// Piecewise line y = m*t + c per segment, intercepts chosen so that y(0) =
// initial_price and each segment continues the previous one's value at the
// boundary index. Output clamped to kMinPrice; *clamped set if that fired.
PriceSeries gen_trend(std::span<const TrendSegmentSpec> segments, Index n, double initial_price,
                      bool* clamped = nullptr);

// Piecewise sinusoid y = A*sin(b*t) + c per segment, offsets chosen for the
// same boundary continuity and y(0) = initial_price. Throws
// std::invalid_argument ("cycle breaches price floor") if any segment's
// c - A would fall below kMinPrice.
PriceSeries gen_cycle(std::span<const CycleSegmentSpec> segments, Index n, double initial_price);

// X[t] = Y[t] * (1 + alpha*(2R[t]-1)), R uniform on [0,1). The relative
// deviation |X/Y - 1| is bounded by alpha at every step.
PriceSeries apply_simple_noise(const PriceSeries& clean, double alpha, std::uint64_t seed,
                               bool* clamped = nullptr);

// Random walk anchored to the clean signal:
//   X[0] = Y[0],  X[t+1] = X[t] * (1 + alpha*E[t]),
//   E[t] = R[t] - k*(X[t]/Y[t] - 1),  R uniform on [-1,1).
// The -k term pulls the walk back toward the clean level, so deviations are
// autocorrelated but mean-reverting.
PriceSeries apply_energy_noise(const PriceSeries& clean, double alpha, double k,
                               std::uint64_t seed, bool* clamped = nullptr);

// Samples the layout when random (segment stream), builds the clean series,
// then applies the configured noise (noise stream). Both streams are derived
// from spec.seed with child_seed(), so the result is reproducible.
GeneratedWorld generate(const GeneratorSpec& spec);

}  // namespace talab
