#include "talab/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "talab/rng.hpp"

namespace talab {

namespace {

void check_partition(std::span<const Index> starts, Index n) {
  if (starts.empty()) throw std::invalid_argument("empty segment list");
  if (starts.front() != 0) throw std::invalid_argument("first segment must start at 0");
  for (std::size_t i = 1; i < starts.size(); ++i)
    if (starts[i] <= starts[i - 1])
      throw std::invalid_argument("segment starts must be strictly increasing");
  if (starts.back() >= n) throw std::invalid_argument("segment start beyond series end");
}

Eigen::ArrayXd clamp_floor(Eigen::ArrayXd y, bool* clamped) {
  const bool clipped = (y < kMinPrice).any();
  if (clamped) *clamped = clipped;
  if (clipped) y = y.max(kMinPrice);
  return y;
}

void validate_noise(const NoiseSpec& noise) {
  if (noise.kind == NoiseKind::None) return;
  if (!(noise.alpha >= 0.0 && noise.alpha <= 0.5))
    throw std::invalid_argument("noise alpha must be in [0, 0.5]");
  if (noise.kind == NoiseKind::Energy) {
    if (!(noise.alpha > 0.0)) throw std::invalid_argument("energy noise requires alpha > 0");
    if (!(noise.k > 0.0 && noise.k <= 4.0))
      throw std::invalid_argument("energy noise k must be in (0, 4]");
  }
}

// Draws count-1 distinct interior boundaries, uniform conditioned on every
// segment being at least min_len long. Rejection keeps the conditional law
// exact; the attempt cap turns infeasible-in-practice specs into errors.
std::vector<Index> sample_boundaries(Rng& rng, Index n, int count, Index min_len) {
  if (count < 1) throw std::invalid_argument("segment count must be >= 1");
  min_len = std::max<Index>(min_len, 1);
  if (static_cast<Index>(count) * min_len > n)
    throw std::invalid_argument("cannot place segments: series too short");
  std::vector<Index> b(static_cast<std::size_t>(count - 1));
  if (b.empty()) return b;
  for (int attempt = 0; attempt < 100000; ++attempt) {
    for (auto& v : b) v = rng.uniform_int(min_len, n - min_len);
    std::sort(b.begin(), b.end());
    bool ok = n - b.back() >= min_len;
    for (std::size_t i = 1; i < b.size() && ok; ++i) ok = b[i] - b[i - 1] >= min_len;
    if (ok) return b;
  }
  throw std::invalid_argument("cannot place segments: constraints too tight");
}

}  // namespace

PriceSeries gen_trend(std::span<const TrendSegmentSpec> segments, Index n, double initial_price,
                      bool* clamped) {
  if (!(initial_price > 0.0)) throw std::invalid_argument("non-positive initial price");
  std::vector<Index> starts(segments.size());
  std::transform(segments.begin(), segments.end(), starts.begin(),
                 [](const TrendSegmentSpec& s) { return s.start; });
  check_partition(starts, n);

  // Intercepts: c_0 from y(0), then each segment continues the previous
  // line's value at its own start index.
  std::vector<double> intercept(segments.size());
  intercept[0] = initial_price;
  for (std::size_t i = 1; i < segments.size(); ++i) {
    const auto boundary = static_cast<double>(segments[i].start);
    const double carried = segments[i - 1].slope * boundary + intercept[i - 1];
    intercept[i] = carried - segments[i].slope * boundary;
  }

  Eigen::ArrayXd y(n);
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const Index end = (i + 1 < segments.size()) ? segments[i + 1].start : n;
    for (Index t = segments[i].start; t < end; ++t)
      y[t] = segments[i].slope * static_cast<double>(t) + intercept[i];
  }
  return PriceSeries(clamp_floor(std::move(y), clamped));
}

PriceSeries gen_cycle(std::span<const CycleSegmentSpec> segments, Index n, double initial_price) {
  if (!(initial_price > 0.0)) throw std::invalid_argument("non-positive initial price");
  std::vector<Index> starts(segments.size());
  std::transform(segments.begin(), segments.end(), starts.begin(),
                 [](const CycleSegmentSpec& s) { return s.start; });
  check_partition(starts, n);
  for (const auto& s : segments) {
    if (s.amplitude < 0.0) throw std::invalid_argument("cycle amplitude must be >= 0");
    if (!(s.angular_freq > 0.0)) throw std::invalid_argument("cycle frequency must be > 0");
  }

  // Offsets: c_0 from y(0) (sin(0) = 0), then boundary continuity.
  std::vector<double> offset(segments.size());
  offset[0] = initial_price;
  for (std::size_t i = 1; i < segments.size(); ++i) {
    const auto boundary = static_cast<double>(segments[i].start);
    const double carried =
        segments[i - 1].amplitude * std::sin(segments[i - 1].angular_freq * boundary) +
        offset[i - 1];
    offset[i] = carried - segments[i].amplitude * std::sin(segments[i].angular_freq * boundary);
  }
  for (std::size_t i = 0; i < segments.size(); ++i)
    if (offset[i] - segments[i].amplitude < kMinPrice)
      throw std::invalid_argument("cycle breaches price floor");

  Eigen::ArrayXd y(n);
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const Index end = (i + 1 < segments.size()) ? segments[i + 1].start : n;
    for (Index t = segments[i].start; t < end; ++t)
      y[t] = segments[i].amplitude * std::sin(segments[i].angular_freq * static_cast<double>(t)) +
             offset[i];
  }
  return PriceSeries(std::move(y));
}

PriceSeries apply_simple_noise(const PriceSeries& clean, double alpha, std::uint64_t seed,
                               bool* clamped) {
  if (!(alpha >= 0.0 && alpha <= 0.5))
    throw std::invalid_argument("noise alpha must be in [0, 0.5]");
  Rng rng(seed);
  Eigen::ArrayXd r(clean.size());
  for (Index t = 0; t < r.size(); ++t) r[t] = rng.uniform01();
  Eigen::ArrayXd x = clean.values() * (1.0 + alpha * (2.0 * r - 1.0));
  return PriceSeries(clamp_floor(std::move(x), clamped));
}

PriceSeries apply_energy_noise(const PriceSeries& clean, double alpha, double k,
                               std::uint64_t seed, bool* clamped) {
  if (!(alpha > 0.0 && alpha <= 0.5))
    throw std::invalid_argument("energy noise alpha must be in (0, 0.5]");
  if (!(k > 0.0 && k <= 4.0)) throw std::invalid_argument("energy noise k must be in (0, 4]");
  Rng rng(seed);
  const auto& y = clean.values();
  Eigen::ArrayXd x(clean.size());
  bool clipped = false;
  x[0] = y[0];
  for (Index t = 0; t + 1 < clean.size(); ++t) {
    const double deviation = x[t] / y[t] - 1.0;
    const double energy = rng.uniform_pm1() - k * deviation;
    double next = x[t] * (1.0 + alpha * energy);
    if (next < kMinPrice) {
      next = kMinPrice;
      clipped = true;
    }
    x[t + 1] = next;
  }
  if (clamped) *clamped = clipped;
  return PriceSeries(std::move(x));
}

namespace {

std::vector<TrendSegmentSpec> sample_trend_layout(Rng& rng, const RandomTrendParams& p, Index n) {
  if (p.min_segments < 1 || p.max_segments < p.min_segments)
    throw std::invalid_argument("segment count range is empty");
  if (p.max_slope < p.min_slope) throw std::invalid_argument("slope range is empty");
  const int count = static_cast<int>(rng.uniform_int(p.min_segments, p.max_segments));
  const auto bounds = sample_boundaries(rng, n, count, p.min_segment_len);
  std::vector<TrendSegmentSpec> segs;
  segs.reserve(bounds.size() + 1);
  for (int i = 0; i < count; ++i) {
    const Index start = (i == 0) ? 0 : bounds[i - 1];
    segs.push_back({rng.uniform(p.min_slope, p.max_slope), start});
  }
  return segs;
}

std::vector<CycleSegmentSpec> sample_cycle_layout(Rng& rng, const RandomCycleParams& p, Index n) {
  if (p.min_segments < 1 || p.max_segments < p.min_segments)
    throw std::invalid_argument("segment count range is empty");
  if (p.max_amplitude < p.min_amplitude || p.min_amplitude < 0.0)
    throw std::invalid_argument("amplitude range is empty");
  if (p.max_period < p.min_period || !(p.min_period > 0.0))
    throw std::invalid_argument("period range is empty");
  const int count = static_cast<int>(rng.uniform_int(p.min_segments, p.max_segments));
  const auto bounds = sample_boundaries(rng, n, count, p.min_segment_len);
  std::vector<CycleSegmentSpec> segs;
  segs.reserve(bounds.size() + 1);
  for (int i = 0; i < count; ++i) {
    const Index start = (i == 0) ? 0 : bounds[i - 1];
    const double amplitude = rng.uniform(p.min_amplitude, p.max_amplitude);
    const double period = rng.uniform(p.min_period, p.max_period);
    segs.push_back({amplitude, 2.0 * std::numbers::pi / period, start});
  }
  return segs;
}

}  // namespace

GeneratedWorld generate(const GeneratorSpec& spec) {
  if (spec.n < 2) throw std::invalid_argument("n must be >= 2");
  validate_noise(spec.noise);

  Rng seg_rng(child_seed(spec.seed, kStreamSegments));
  std::vector<TrendSegmentSpec> trend_segments;
  std::vector<CycleSegmentSpec> cycle_segments;
  if (const auto* segs = std::get_if<std::vector<TrendSegmentSpec>>(&spec.layout)) {
    trend_segments = *segs;
  } else if (const auto* segs = std::get_if<std::vector<CycleSegmentSpec>>(&spec.layout)) {
    cycle_segments = *segs;
  } else if (const auto* p = std::get_if<RandomTrendParams>(&spec.layout)) {
    trend_segments = sample_trend_layout(seg_rng, *p, spec.n);
  } else {
    cycle_segments = sample_cycle_layout(seg_rng, std::get<RandomCycleParams>(spec.layout), spec.n);
  }

  bool clean_clamped = false;
  PriceSeries clean = spec.is_trend()
                          ? gen_trend(trend_segments, spec.n, spec.initial_price, &clean_clamped)
                          : gen_cycle(cycle_segments, spec.n, spec.initial_price);

  bool noisy_clamped = false;
  const std::uint64_t noise_seed = child_seed(spec.seed, kStreamNoise);
  PriceSeries noisy = [&] {
    switch (spec.noise.kind) {
      case NoiseKind::Simple:
        return apply_simple_noise(clean, spec.noise.alpha, noise_seed, &noisy_clamped);
      case NoiseKind::Energy:
        return apply_energy_noise(clean, spec.noise.alpha, spec.noise.k, noise_seed,
                                  &noisy_clamped);
      case NoiseKind::None:
      default:
        return clean;
    }
  }();

  return GeneratedWorld{spec,
                        std::move(trend_segments),
                        std::move(cycle_segments),
                        std::move(clean),
                        std::move(noisy),
                        clean_clamped,
                        noisy_clamped};
}

}  // namespace talab
