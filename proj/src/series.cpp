#include "talab/series.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

namespace talab {

PriceSeries::PriceSeries(Eigen::ArrayXd values) : values_(std::move(values)) {
  if (values_.size() < 1) throw std::invalid_argument("price series must not be empty");
  if (!(values_ > 0.0).all()) throw std::invalid_argument("price series values must be > 0");
}

PriceSeries PriceSeries::from_vector(const std::vector<double>& v) {
  return PriceSeries(Eigen::Map<const Eigen::ArrayXd>(v.data(), static_cast<Index>(v.size())));
}

ValueSeries::ValueSeries(Eigen::ArrayXd values, Index valid_from)
    : values_(std::move(values)), valid_from_(valid_from) {
  if (valid_from_ < 0 || valid_from_ > values_.size())
    throw std::invalid_argument("valid_from out of range");
  values_.head(valid_from_).setConstant(std::numeric_limits<double>::quiet_NaN());
}

double ValueSeries::at(Index t) const {
  if (t < 0 || t >= values_.size()) throw std::out_of_range("out of range");
  if (t < valid_from_) throw std::domain_error("undefined warm-up value");
  return values_[t];
}

ValueSeries simple_returns(const PriceSeries& prices) {
  const Index n = prices.size();
  if (n < 2) throw std::invalid_argument("series too short");
  Eigen::ArrayXd out(n);
  out.tail(n - 1) = prices.values().tail(n - 1) / prices.values().head(n - 1) - 1.0;
  return ValueSeries(std::move(out), 1);
}

}  // namespace talab
