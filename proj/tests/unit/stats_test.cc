// Copyright 2026 The Affectix Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "affectix/stats.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "affectix/error.hpp"
#include "doctest.h"
#include "t_oracle_data.hpp"

namespace affectix {
namespace {

using testing::kCdfPoints;
using testing::kTTestCases;

double RelErr(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

ErrorKind KindOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::kArgument;
}

TEST_CASE("Summaries use the sample std") {
  const std::vector<double> xs = {1, 2, 3};
  const SampleSummary s = Summarize(xs);
  CHECK(s.n == 3);
  CHECK(s.mean == 2.0);
  CHECK(s.sd == 1.0);

  const std::vector<double> one = {5};
  CHECK(Summarize(one).sd == 0.0);
  CHECK(Summarize(one).mean == 5.0);

  const std::vector<double> flat = {0.3, 0.3, 0.3, 0.3};
  CHECK(Summarize(flat).sd == 0.0);
  CHECK(Summarize(flat).mean == doctest::Approx(0.3).epsilon(1e-15));

  CHECK(StandardDeviation(xs, StdMode::kPopulation) ==
        doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-15));
}

TEST_CASE("Summaries reject empty and non-finite input") {
  CHECK(KindOf([] { Summarize(std::vector<double>{}); }) == ErrorKind::kArgument);
  CHECK(KindOf([] {
          Summarize(std::vector<double>{1, std::numeric_limits<double>::infinity()});
        }) == ErrorKind::kArgument);
  CHECK(KindOf([] { Mean(std::vector<double>{std::nan("")}); }) ==
        ErrorKind::kArgument);
}

TEST_CASE("Student t CDF against the quadrature oracle") {
  for (const auto& p : kCdfPoints) {
    INFO("t=", p.t, " df=", p.df);
    CHECK(RelErr(StudentTCdf(p.t, p.df), p.cdf) < 1e-10);
  }
  CHECK(StudentTCdf(0.0, 3.0) == 0.5);
  CHECK(StudentTCdf(0.0, 0.37) == 0.5);
  CHECK(StudentTCdf(std::numeric_limits<double>::infinity(), 5.0) == 1.0);
  CHECK(StudentTCdf(-std::numeric_limits<double>::infinity(), 5.0) == 0.0);
  CHECK(StudentTCdf(1e8, 5.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(KindOf([] { StudentTCdf(1.0, 0.0); }) == ErrorKind::kArgument);
  CHECK(KindOf([] { StudentTCdf(1.0, -2.0); }) == ErrorKind::kArgument);
}

TEST_CASE("Student t CDF is symmetric and monotone") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> tdist(-40.0, 40.0);
  std::uniform_real_distribution<double> logdf(-1.0, 3.0);
  for (int i = 0; i < 2000; ++i) {
    const double t = tdist(rng);
    const double df = std::pow(10.0, logdf(rng));
    CHECK(std::abs(StudentTCdf(t, df) + StudentTCdf(-t, df) - 1.0) <= 1e-12);
  }
  for (double df : {0.5, 1.0, 3.0, 17.5, 200.0}) {
    double prev = 0.0;
    for (double t = -30.0; t <= 30.0; t += 0.01) {
      const double c = StudentTCdf(t, df);
      CHECK(c >= prev);
      CHECK(c >= 0.0);
      CHECK(c <= 1.0);
      prev = c;
    }
  }
}

TEST_CASE("Regularized incomplete beta edge values") {
  CHECK(RegularizedIncompleteBeta(2.0, 3.0, 0.0) == 0.0);
  CHECK(RegularizedIncompleteBeta(2.0, 3.0, 1.0) == 1.0);
  // I_x(1, 1) = x and I_x(a, 1) = x^a.
  CHECK(RegularizedIncompleteBeta(1.0, 1.0, 0.37) == doctest::Approx(0.37).epsilon(1e-14));
  CHECK(RegularizedIncompleteBeta(3.5, 1.0, 0.6) ==
        doctest::Approx(std::pow(0.6, 3.5)).epsilon(1e-13));
  CHECK(KindOf([] { RegularizedIncompleteBeta(2.0, 3.0, 1.5); }) ==
        ErrorKind::kArgument);
}

TEST_CASE("t-tests match the textbook statistic and the quadrature p-value") {
  for (const auto& c : kTTestCases) {
    const TTestResult r =
        TwoSampleTTest(c.a, c.b, c.welch ? TTestKind::kWelch : TTestKind::kPooled);
    INFO("n_a=", c.a.size(), " n_b=", c.b.size(), " welch=", c.welch);
    CHECK(RelErr(r.t, c.t) < 1e-12);
    CHECK(RelErr(r.df, c.df) < 1e-12);
    CHECK(RelErr(r.p_two_sided, c.p) < 1e-10);
  }
}

TEST_CASE("The worked Welch example") {
  const std::vector<double> a = {0.1, 0.2, 0.15, 0.25};
  const std::vector<double> b = {0.4, 0.5, 0.45, 0.55};
  const TTestResult r = TwoSampleTTest(a, b);
  CHECK(r.kind == TTestKind::kWelch);
  CHECK(r.df == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(std::abs(r.p_two_sided - 5.9476497548625920e-4) < 1e-8 * 5.9476497548625920e-4);
}

TEST_CASE("Identical samples give t = 0 and p = 1") {
  const std::vector<double> a = {1, 2, 3, 4};
  for (auto kind : {TTestKind::kWelch, TTestKind::kPooled}) {
    const TTestResult r = TwoSampleTTest(a, a, kind);
    CHECK(r.t == 0.0);
    CHECK(r.p_two_sided == 1.0);
  }
}

TEST_CASE("t-test error cases") {
  const std::vector<double> one = {1.0};
  const std::vector<double> two = {1.0, 2.0};
  const std::vector<double> flat = {2.0, 2.0, 2.0};
  const std::vector<double> flat_other = {3.0, 3.0};
  CHECK(KindOf([&] { TwoSampleTTest(one, two); }) == ErrorKind::kArgument);
  CHECK(KindOf([&] { TwoSampleTTest(two, one); }) == ErrorKind::kArgument);
  CHECK(KindOf([&] { TwoSampleTTest(flat, flat); }) == ErrorKind::kDegenerateTest);
  CHECK(KindOf([&] { TwoSampleTTest(flat, flat, TTestKind::kPooled); }) ==
        ErrorKind::kDegenerateTest);
  // Constant samples with different means separate perfectly.
  const TTestResult r = TwoSampleTTest(flat, flat_other);
  CHECK(std::isinf(r.t));
  CHECK(r.t < 0.0);
  CHECK(r.p_two_sided == 0.0);
}

// Values on a 2^-30 grid, so adding the shifts used below is exact and the
// invariance checks see only the test's own arithmetic.
std::vector<double> Draw(std::mt19937_64& rng, std::size_t n, double mu, double sd) {
  std::normal_distribution<double> g(mu, sd);
  std::vector<double> xs(n);
  for (auto& x : xs) x = std::ldexp(std::round(std::ldexp(g(rng), 30)), -30);
  return xs;
}

TEST_CASE("t-test invariances and the Welch df bounds") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<std::size_t> size(2, 30);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t na = size(rng), nb = size(rng);
    const auto a = Draw(rng, na, 0.1, 0.03);
    const auto b = Draw(rng, nb, 0.12, 0.02);
    for (auto kind : {TTestKind::kWelch, TTestKind::kPooled}) {
      const TTestResult r = TwoSampleTTest(a, b, kind);
      const TTestResult swapped = TwoSampleTTest(b, a, kind);
      CHECK(swapped.t == -r.t);
      CHECK(swapped.df == r.df);
      CHECK(swapped.p_two_sided == r.p_two_sided);
      CHECK(r.p_two_sided >= 0.0);
      CHECK(r.p_two_sided <= 1.0);

      for (auto [shift, scale] : std::vector<std::pair<double, double>>{
               {0.25, 1.0}, {-3.0, 1.0}, {0.0, 4.0}, {0.0, 0.125}}) {
        auto a2 = a, b2 = b;
        for (auto& x : a2) x = scale * (x + shift);
        for (auto& x : b2) x = scale * (x + shift);
        const TTestResult m = TwoSampleTTest(a2, b2, kind);
        CHECK(RelErr(m.t, r.t) <= 1e-12);
        CHECK(RelErr(m.df, r.df) <= 1e-12);
        CHECK(std::abs(m.p_two_sided - r.p_two_sided) <=
              1e-12);
      }
      if (kind == TTestKind::kWelch) {
        CHECK(r.df >= static_cast<double>(std::min(na, nb)) - 1.0 - 1e-12);
        CHECK(r.df <= static_cast<double>(na + nb) - 2.0 + 1e-12);
      } else {
        CHECK(r.df == static_cast<double>(na + nb - 2));
      }
    }
  }
}

}  // namespace
}  // namespace affectix
