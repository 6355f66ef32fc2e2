#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "talab/backtest_types.hpp"
#include "talab/experiment.hpp"
#include "talab/series.hpp"

// CSV emission and ingestion. Single series use the header `t,value`,
// generated worlds `t,clean,noisy`; numbers are written with up to 12
// significant digits and comment lines start with '#'.

namespace talab {

// Parse/IO failure with a 1-based line number (0 when the file itself is
// unreadable).
class CsvError : public std::runtime_error {
 public:
  CsvError(const std::string& message, int line)
      : std::runtime_error(line > 0 ? message + " at line " + std::to_string(line) : message),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

std::string format_number(double v);  // %.12g

void write_series_csv(const std::string& path, const PriceSeries& series,
                      const std::vector<std::string>& comments = {});

void write_world_csv(const std::string& path, const PriceSeries& clean, const PriceSeries& noisy,
                     const std::vector<std::string>& comments = {});

void write_curve_csv(const std::string& path, const EquityCurve& curve);

// Indicator dump: price plus named derived columns; warm-up cells are empty.
void write_indicators_csv(const std::string& path, const PriceSeries& prices,
                          const std::vector<std::pair<std::string, const ValueSeries*>>& columns);

void write_rows_csv(const std::string& path, const std::vector<GridResultRow>& rows,
                    const std::vector<std::string>& comments = {});

void write_aggregate_csv(const std::string& path, const std::vector<AggregateRow>& rows,
                         const std::vector<std::string>& comments = {});

// Reads the named column of a series/world CSV as prices. Throws CsvError on
// unreadable files, malformed rows, unknown columns or non-positive prices.
PriceSeries read_price_csv(const std::string& path, const std::string& column = "value");

}  // namespace talab
