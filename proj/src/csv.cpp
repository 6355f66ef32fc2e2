#include "talab/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace talab {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw CsvError("cannot open '" + path + "' for writing", 0);
  return out;
}

void write_comments(std::ofstream& out, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << "\n";
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

void write_series_csv(const std::string& path, const PriceSeries& series,
                      const std::vector<std::string>& comments) {
  auto out = open_out(path);
  write_comments(out, comments);
  out << "t,value\n";
  for (Index t = 0; t < series.size(); ++t)
    out << t << ',' << format_number(series[t]) << '\n';
}

void write_world_csv(const std::string& path, const PriceSeries& clean, const PriceSeries& noisy,
                     const std::vector<std::string>& comments) {
  auto out = open_out(path);
  write_comments(out, comments);
  out << "t,clean,noisy\n";
  for (Index t = 0; t < clean.size(); ++t)
    out << t << ',' << format_number(clean[t]) << ',' << format_number(noisy[t]) << '\n';
}

void write_curve_csv(const std::string& path, const EquityCurve& curve) {
  auto out = open_out(path);
  out << "t,equity\n";
  for (Index t = 0; t < curve.size(); ++t) out << t << ',' << format_number(curve[t]) << '\n';
}

void write_indicators_csv(const std::string& path, const PriceSeries& prices,
                          const std::vector<std::pair<std::string, const ValueSeries*>>& columns) {
  auto out = open_out(path);
  out << "t,price";
  for (const auto& [name, series] : columns) out << ',' << name;
  out << '\n';
  for (Index t = 0; t < prices.size(); ++t) {
    out << t << ',' << format_number(prices[t]);
    for (const auto& [name, series] : columns) {
      out << ',';
      if (t >= series->valid_from()) out << format_number(series->at(t));
    }
    out << '\n';
  }
}

void write_rows_csv(const std::string& path, const std::vector<GridResultRow>& rows,
                    const std::vector<std::string>& comments) {
  auto out = open_out(path);
  write_comments(out, comments);
  out << "strategy,pattern,noise,alpha,k,seed_index,seed,total_return_pct,"
         "buyhold_return_pct,excess_pct,trades_count,max_drawdown_pct\n";
  for (const auto& r : rows) {
    out << r.strategy << ',' << r.pattern << ',' << r.noise << ',' << format_number(r.alpha)
        << ',' << format_number(r.k) << ',' << r.seed_index << ',' << r.seed << ','
        << format_number(r.total_return_pct) << ',' << format_number(r.buyhold_return_pct) << ','
        << format_number(r.excess_pct) << ',' << r.trades_count << ','
        << format_number(r.max_drawdown_pct) << '\n';
  }
}

void write_aggregate_csv(const std::string& path, const std::vector<AggregateRow>& rows,
                         const std::vector<std::string>& comments) {
  auto out = open_out(path);
  write_comments(out, comments);
  out << "strategy,pattern,noise,alpha,k,runs,median_return_pct,median_excess_pct,win_rate\n";
  for (const auto& r : rows) {
    out << r.strategy << ',' << r.pattern << ',' << r.noise << ',' << format_number(r.alpha)
        << ',' << format_number(r.k) << ',' << r.runs << ',' << format_number(r.median_return_pct)
        << ',' << format_number(r.median_excess_pct) << ',' << format_number(r.win_rate) << '\n';
  }
}

PriceSeries read_price_csv(const std::string& path, const std::string& column) {
  std::ifstream in(path);
  if (!in) throw CsvError("cannot open '" + path + "'", 0);

  std::string line;
  int line_no = 0;
  int value_col = -1;
  std::vector<double> values;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split_fields(line);
    if (value_col < 0) {  // header row
      for (std::size_t i = 0; i < fields.size(); ++i)
        if (fields[i] == column) value_col = static_cast<int>(i);
      if (value_col < 0)
        throw CsvError("column '" + column + "' not found in header", line_no);
      continue;
    }
    if (fields.size() <= static_cast<std::size_t>(value_col))
      throw CsvError("malformed CSV row", line_no);
    const std::string& cell = fields[static_cast<std::size_t>(value_col)];
    std::size_t consumed = 0;
    double v = 0.0;
    try {
      v = std::stod(cell, &consumed);
    } catch (const std::exception&) {
      throw CsvError("malformed CSV row", line_no);
    }
    if (consumed != cell.size()) throw CsvError("malformed CSV row", line_no);
    if (!(v > 0.0)) throw CsvError("non-positive price", line_no);
    values.push_back(v);
  }
  if (values.empty()) throw CsvError("no data rows in '" + path + "'", line_no);
  return PriceSeries::from_vector(values);
}

}  // namespace talab
