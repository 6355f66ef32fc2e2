#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "talab/rng.hpp"
#include "talab/series.hpp"

using namespace talab;

TEST_CASE("price series rejects empty and non-positive values") {
  CHECK_THROWS_AS(PriceSeries(Eigen::ArrayXd(0)), std::invalid_argument);
  Eigen::ArrayXd bad(3);
  bad << 1.0, 0.0, 2.0;
  CHECK_THROWS_AS(PriceSeries{bad}, std::invalid_argument);
  Eigen::ArrayXd neg(2);
  neg << 1.0, -5.0;
  CHECK_THROWS_AS(PriceSeries{neg}, std::invalid_argument);
}

TEST_CASE("simple returns basic cases") {
  const auto r = simple_returns(PriceSeries::from_vector({100.0, 110.0}));
  CHECK(r.valid_from() == 1);
  CHECK(r.at(1) == doctest::Approx(0.10).epsilon(1e-12));
  CHECK_THROWS_AS(r.at(0), std::domain_error);

  const auto flat = simple_returns(PriceSeries::from_vector({5.0, 5.0, 5.0}));
  CHECK(flat.at(1) == 0.0);
  CHECK(flat.at(2) == 0.0);
}

TEST_CASE("simple returns rejects short series") {
  CHECK_THROWS_WITH_AS(simple_returns(PriceSeries::from_vector({3.0})), "series too short",
                       std::invalid_argument);
}

TEST_CASE("simple returns matches division oracle on random prices") {
  const auto p = oracle::random_prices(2024, 500);
  const auto got = simple_returns(PriceSeries::from_vector(p));
  const auto want = oracle::simple_returns(p);
  for (std::size_t t = 1; t < p.size(); ++t)
    CHECK(got.at(static_cast<Index>(t)) ==
          doctest::Approx(want[t]).epsilon(1e-12));
}

TEST_CASE("returns reconstruct prices multiplicatively") {
  const auto p = oracle::random_prices(99, 300);
  const auto r = simple_returns(PriceSeries::from_vector(p));
  double acc = p[0];
  for (std::size_t t = 1; t < p.size(); ++t) {
    acc *= 1.0 + r.at(static_cast<Index>(t));
    CHECK(acc == doctest::Approx(p[t]).epsilon(1e-9));
  }
}

TEST_CASE("value series access contract") {
  Eigen::ArrayXd v(4);
  v << 1.0, 2.0, 3.0, 4.0;
  const ValueSeries s(v, 2);
  CHECK(s.at(2) == 3.0);
  CHECK(s.at(3) == 4.0);
  CHECK_THROWS_WITH_AS(s.at(1), "undefined warm-up value", std::domain_error);
  CHECK_THROWS_WITH_AS(s.at(4), "out of range", std::out_of_range);
  CHECK_THROWS_AS(s.at(-1), std::out_of_range);

  const ValueSeries all(v, 0);
  for (Index t = 0; t < 4; ++t) CHECK_NOTHROW(all.at(t));

  CHECK(s.defined().size() == 2);
  CHECK(s.defined()[0] == 3.0);
}

TEST_CASE("value series never exposes warm-up values") {
  Rng rng(555);
  for (int rep = 0; rep < 100; ++rep) {
    const Index n = rng.uniform_int(1, 40);
    const Index vf = rng.uniform_int(0, n);
    const ValueSeries s(Eigen::ArrayXd::Constant(n, 1.0), vf);
    for (Index t = 0; t < n; ++t) {
      if (t < vf)
        CHECK_THROWS_AS(s.at(t), std::domain_error);
      else
        CHECK(s.at(t) == 1.0);
    }
    CHECK_THROWS_AS(s.at(n), std::out_of_range);
  }
}

TEST_CASE("value series rejects out-of-range valid_from") {
  CHECK_THROWS_AS(ValueSeries(Eigen::ArrayXd::Constant(3, 1.0), 4), std::invalid_argument);
  CHECK_THROWS_AS(ValueSeries(Eigen::ArrayXd::Constant(3, 1.0), -1), std::invalid_argument);
}
