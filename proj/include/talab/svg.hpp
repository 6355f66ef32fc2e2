#pragma once

#include <string>
#include <vector>

#include "talab/backtest.hpp"

// Static SVG chart for one backtest run: price with indicator overlays and
// entry/exit markers, an optional 0-100 oscillator panel, and the equity
// curve. Axes autoscale; no interactivity.

namespace talab {

struct ChartLine {
  std::string label;
  std::string color;
  const ValueSeries* values = nullptr;
};

struct BacktestChart {
  std::string title;
  const PriceSeries* prices = nullptr;
  std::vector<ChartLine> price_overlays;
  const ValueSeries* oscillator = nullptr;  // drawn on its own fixed 0-100 panel
  double oscillator_low = 30.0;
  double oscillator_high = 70.0;
  std::string oscillator_label;
  const EquityCurve* equity = nullptr;
  const std::vector<Trade>* trades = nullptr;
};

void write_backtest_svg(const std::string& path, const BacktestChart& chart);

}  // namespace talab
