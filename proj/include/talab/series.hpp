#pragma once

#include <Eigen/Core>

// Core time-series value types. Time is a unitless integer index t = 0..n-1
// with unit step; there is no calendar. Both types are immutable after
// construction and safe to share across threads.

namespace talab {

using Index = Eigen::Index;

// Positive price values at integer time steps.
class PriceSeries {
 public:
  // Throws std::invalid_argument if empty or any value is not > 0.
  explicit PriceSeries(Eigen::ArrayXd values);

  static PriceSeries from_vector(const std::vector<double>& v);

  Index size() const noexcept { return values_.size(); }
  double operator[](Index t) const { return values_[t]; }
  const Eigen::ArrayXd& values() const noexcept { return values_; }

 private:
  Eigen::ArrayXd values_;
};

// A derived series whose first valid_from positions are undefined (indicator
// warm-up). Undefined slots are structural: reading one is an error, never a
// sentinel value that silently propagates. The storage under the warm-up
// prefix is quiet NaN purely as a tripwire for code that bypasses at().
class ValueSeries {
 public:
  ValueSeries(Eigen::ArrayXd values, Index valid_from);

  Index size() const noexcept { return values_.size(); }
  Index valid_from() const noexcept { return valid_from_; }

  // Checked read. Throws std::out_of_range for t outside [0, size()),
  // std::domain_error ("undefined warm-up value") for t < valid_from.
  double at(Index t) const;

  // View of the defined suffix [valid_from, size).
  auto defined() const { return values_.segment(valid_from_, values_.size() - valid_from_); }

  const Eigen::ArrayXd& raw() const noexcept { return values_; }

 private:
  Eigen::ArrayXd values_;
  Index valid_from_;
};

// One-step simple returns: out[t] = prices[t]/prices[t-1] - 1, valid from 1.
// Throws std::invalid_argument ("series too short") if length < 2.
ValueSeries simple_returns(const PriceSeries& prices);

}  // namespace talab
