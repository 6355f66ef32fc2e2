#include "talab/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "talab/csv.hpp"

namespace talab {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// Maps (t, value) into one panel's pixel viewport. SVG y grows downward.
struct PanelMap {
  double x0, y0, w, h;        // viewport in pixels
  double t_max;               // data x range is [0, t_max]
  double v_min, v_max;        // data y range

  double x(double t) const { return x0 + (t_max > 0 ? t / t_max : 0.0) * w; }
  double y(double v) const {
    const double range = v_max - v_min;
    const double f = range > 0 ? (v - v_min) / range : 0.5;
    return y0 + h - f * h;
  }
};

void panel_frame(std::ofstream& out, const PanelMap& m, const std::string& label) {
  out << "<rect x='" << fmt(m.x0) << "' y='" << fmt(m.y0) << "' width='" << fmt(m.w)
      << "' height='" << fmt(m.h) << "' fill='white' stroke='#999'/>\n";
  out << "<text x='" << fmt(m.x0 + 4) << "' y='" << fmt(m.y0 + 14)
      << "' font-size='12' fill='#333'>" << label << "</text>\n";
  out << "<text x='" << fmt(m.x0 - 6) << "' y='" << fmt(m.y0 + 10)
      << "' font-size='10' text-anchor='end' fill='#555'>" << fmt(m.v_max) << "</text>\n";
  out << "<text x='" << fmt(m.x0 - 6) << "' y='" << fmt(m.y0 + m.h)
      << "' font-size='10' text-anchor='end' fill='#555'>" << fmt(m.v_min) << "</text>\n";
}

void polyline(std::ofstream& out, const PanelMap& m, const Eigen::ArrayXd& values,
              Index valid_from, const std::string& color) {
  out << "<polyline fill='none' stroke='" << color << "' stroke-width='1' points='";
  for (Index t = valid_from; t < values.size(); ++t)
    out << fmt(m.x(static_cast<double>(t))) << ',' << fmt(m.y(values[t])) << ' ';
  out << "'/>\n";
}

void marker(std::ofstream& out, double cx, double cy, bool up, const std::string& color) {
  const double r = 4.0;
  if (up)
    out << "<path d='M " << fmt(cx - r) << ' ' << fmt(cy + r) << " L " << fmt(cx + r) << ' '
        << fmt(cy + r) << " L " << fmt(cx) << ' ' << fmt(cy - r) << " Z' fill='" << color
        << "'/>\n";
  else
    out << "<path d='M " << fmt(cx - r) << ' ' << fmt(cy - r) << " L " << fmt(cx + r) << ' '
        << fmt(cy - r) << " L " << fmt(cx) << ' ' << fmt(cy + r) << " Z' fill='" << color
        << "'/>\n";
}

struct Extent {
  double lo = 0.0, hi = 1.0;
  void widen(const Eigen::ArrayXd& values, Index from) {
    for (Index t = from; t < values.size(); ++t) {
      lo = std::min(lo, values[t]);
      hi = std::max(hi, values[t]);
    }
  }
};

Extent extent_of(const Eigen::ArrayXd& values, Index from) {
  Extent e{values[from], values[from]};
  e.widen(values, from);
  return e;
}

}  // namespace

void write_backtest_svg(const std::string& path, const BacktestChart& chart) {
  const double width = 1000.0;
  const double margin_left = 60.0, margin_right = 16.0, margin_top = 30.0;
  const double panel_h = 220.0, gap = 26.0;

  const bool has_osc = chart.oscillator != nullptr;
  const int panels = 1 + (has_osc ? 1 : 0) + (chart.equity ? 1 : 0);
  const double height = margin_top + panels * (panel_h + gap);

  if (!chart.prices) throw std::invalid_argument("chart needs a price series");
  std::ofstream out(path);
  if (!out) throw CsvError("cannot open '" + path + "' for writing", 0);

  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << fmt(width) << "' height='"
      << fmt(height) << "' viewBox='0 0 " << fmt(width) << ' ' << fmt(height) << "'>\n";
  out << "<text x='" << fmt(margin_left) << "' y='20' font-size='14' fill='#111'>" << chart.title
      << "</text>\n";

  const auto n = static_cast<double>(chart.prices->size() - 1);
  double y_cursor = margin_top;

  // Price panel with overlays and trade markers.
  Extent pe = extent_of(chart.prices->values(), 0);
  for (const auto& line : chart.price_overlays)
    pe.widen(line.values->raw(), line.values->valid_from());
  PanelMap price_map{margin_left, y_cursor, width - margin_left - margin_right, panel_h,
                     n, pe.lo, pe.hi};
  panel_frame(out, price_map, "price");
  polyline(out, price_map, chart.prices->values(), 0, "#222");
  const char* overlay_colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
  for (std::size_t i = 0; i < chart.price_overlays.size(); ++i) {
    const auto& line = chart.price_overlays[i];
    const std::string color = line.color.empty() ? overlay_colors[i % 4] : line.color;
    polyline(out, price_map, line.values->raw(), line.values->valid_from(), color);
    out << "<text x='" << fmt(price_map.x0 + price_map.w - 6) << "' y='"
        << fmt(price_map.y0 + 14 + 12 * static_cast<double>(i))
        << "' font-size='10' text-anchor='end' fill='" << color << "'>" << line.label
        << "</text>\n";
  }
  if (chart.trades) {
    for (const auto& t : *chart.trades) {
      marker(out, price_map.x(static_cast<double>(t.entry_index)), price_map.y(t.entry_price),
             true, "#2ca02c");
      if (t.exit_index)
        marker(out, price_map.x(static_cast<double>(*t.exit_index)), price_map.y(t.exit_price),
               false, "#d62728");
    }
  }
  y_cursor += panel_h + gap;

  if (has_osc) {
    PanelMap osc_map{margin_left, y_cursor, width - margin_left - margin_right, panel_h,
                     n, 0.0, 100.0};
    panel_frame(out, osc_map, chart.oscillator_label.empty() ? "oscillator"
                                                             : chart.oscillator_label);
    for (double level : {chart.oscillator_low, chart.oscillator_high})
      out << "<line x1='" << fmt(osc_map.x0) << "' y1='" << fmt(osc_map.y(level)) << "' x2='"
          << fmt(osc_map.x0 + osc_map.w) << "' y2='" << fmt(osc_map.y(level))
          << "' stroke='#bbb' stroke-dasharray='4 3'/>\n";
    polyline(out, osc_map, chart.oscillator->raw(), chart.oscillator->valid_from(), "#9467bd");
    y_cursor += panel_h + gap;
  }

  if (chart.equity) {
    const Extent ee = extent_of(chart.equity->equity, 0);
    PanelMap eq_map{margin_left, y_cursor, width - margin_left - margin_right, panel_h,
                    n, ee.lo, ee.hi};
    panel_frame(out, eq_map, "equity");
    polyline(out, eq_map, chart.equity->equity, 0, "#ff7f0e");
  }

  out << "</svg>\n";
}

}  // namespace talab
