#pragma once

#include <optional>

#include "talab/series.hpp"

namespace talab {

// One round trip (or a still-open position at the end of the series).
// trade_return is the price return exit_price/entry_price - 1; open trades
// are marked to the last price.
struct Trade {
  Index entry_index = 0;
  double entry_price = 0.0;
  std::optional<Index> exit_index;  // nullopt while open
  double exit_price = 0.0;
  double trade_return = 0.0;
};

// Normalized portfolio value over time. equity[0] is the unit starting
// capital; every value stays positive.
struct EquityCurve {
  Eigen::ArrayXd equity;

  explicit EquityCurve(Eigen::ArrayXd e);

  Index size() const noexcept { return equity.size(); }
  double operator[](Index t) const { return equity[t]; }
  double final_value() const { return equity[equity.size() - 1]; }
};

}  // namespace talab
