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
#include <string>

#include "affectix/error.hpp"

namespace affectix {
namespace {

constexpr double kCfTolerance = 1e-12;
constexpr int kCfMaxIterations = 300;
constexpr double kTiny = 1e-300;

void CheckSample(std::span<const double> xs) {
  if (xs.empty()) throw Error(ErrorKind::kArgument, "empty sample");
  for (double x : xs) {
    if (!std::isfinite(x)) {
      throw Error(ErrorKind::kArgument, "non-finite value in sample");
    }
  }
}

double SumSquaredDeviations(std::span<const double> xs, double mean) {
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return ss;
}

// Modified Lentz evaluation of the continued fraction for I_x(a, b).
double BetaContinuedFraction(double a, double b, double x) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kCfMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;

    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kCfTolerance) return h;
  }
  throw Error(ErrorKind::kNumerical,
              "incomplete beta continued fraction did not converge (a=" +
                  std::to_string(a) + ", b=" + std::to_string(b) +
                  ", x=" + std::to_string(x) + ")");
}

// I_x(a, b) with y = 1 - x supplied by the caller, so that x close to 1 does
// not lose precision to cancellation.
double IncompleteBeta(double a, double b, double x, double y) {
  if (x <= 0.0) return 0.0;
  if (y <= 0.0) return 1.0;
  const double log_beta = std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
  const double log_front = a * std::log(x) + b * std::log(y) - log_beta;
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return std::exp(log_front) * BetaContinuedFraction(a, b, x) / a;
  }
  return 1.0 - std::exp(log_front) * BetaContinuedFraction(b, a, y) / b;
}

void CheckDf(double df) {
  if (!(df > 0.0) || std::isnan(df)) {
    throw Error(ErrorKind::kArgument,
                "degrees of freedom must be positive, got " + std::to_string(df));
  }
}

}  // namespace

std::string_view StdModeName(StdMode mode) {
  return mode == StdMode::kPopulation ? "population" : "sample";
}

std::string_view TTestKindName(TTestKind kind) {
  return kind == TTestKind::kWelch ? "welch" : "pooled";
}

double Mean(std::span<const double> xs) {
  CheckSample(xs);
  double sum = 0.0;
  for (double x : xs) sum += x;
  return sum / static_cast<double>(xs.size());
}

double StandardDeviation(std::span<const double> xs, StdMode mode) {
  const double mean = Mean(xs);
  if (xs.size() == 1) return 0.0;
  const double divisor = mode == StdMode::kPopulation
                             ? static_cast<double>(xs.size())
                             : static_cast<double>(xs.size() - 1);
  return std::sqrt(SumSquaredDeviations(xs, mean) / divisor);
}

SampleSummary Summarize(std::span<const double> xs) {
  return {xs.size(), Mean(xs), StandardDeviation(xs, StdMode::kSample)};
}

TTestResult TwoSampleTTest(std::span<const double> a, std::span<const double> b,
                           TTestKind kind) {
  if (a.size() < 2 || b.size() < 2) {
    throw Error(ErrorKind::kArgument,
                "t-test needs at least two values per sample (got " +
                    std::to_string(a.size()) + " and " +
                    std::to_string(b.size()) + ")");
  }
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double mean_a = Mean(a);
  const double mean_b = Mean(b);
  const double var_a = SumSquaredDeviations(a, mean_a) / (na - 1.0);
  const double var_b = SumSquaredDeviations(b, mean_b) / (nb - 1.0);

  TTestResult result;
  result.kind = kind;
  double se2 = 0.0;
  if (kind == TTestKind::kWelch) {
    const double ga = var_a / na;
    const double gb = var_b / nb;
    se2 = ga + gb;
    result.df = se2 > 0.0
                    ? se2 * se2 / (ga * ga / (na - 1.0) + gb * gb / (nb - 1.0))
                    : na + nb - 2.0;
  } else {
    const double pooled =
        ((na - 1.0) * var_a + (nb - 1.0) * var_b) / (na + nb - 2.0);
    se2 = pooled * (1.0 / na + 1.0 / nb);
    result.df = na + nb - 2.0;
  }

  const double diff = mean_a - mean_b;
  if (se2 <= 0.0) {
    if (diff == 0.0) {
      throw Error(ErrorKind::kDegenerateTest,
                  "both samples are constant with equal means; t is undefined");
    }
    result.t = diff > 0.0 ? std::numeric_limits<double>::infinity()
                          : -std::numeric_limits<double>::infinity();
    result.p_two_sided = 0.0;
    return result;
  }
  result.t = diff / std::sqrt(se2);
  result.p_two_sided = StudentTTwoSidedP(result.t, result.df);
  return result;
}

double StudentTTwoSidedP(double t, double df) {
  CheckDf(df);
  if (std::isnan(t)) throw Error(ErrorKind::kArgument, "t is NaN");
  if (std::isinf(t)) return 0.0;
  if (t == 0.0) return 1.0;
  const double t2 = t * t;
  const double x = df / (df + t2);
  const double y = t2 / (df + t2);
  return IncompleteBeta(0.5 * df, 0.5, x, y);
}

double StudentTCdf(double t, double df) {
  const double p = StudentTTwoSidedP(t, df);
  return t < 0.0 ? 0.5 * p : 1.0 - 0.5 * p;
}

double RegularizedIncompleteBeta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw Error(ErrorKind::kArgument, "incomplete beta needs a, b > 0");
  }
  if (!(x >= 0.0 && x <= 1.0)) {
    throw Error(ErrorKind::kArgument, "incomplete beta needs x in [0, 1]");
  }
  return IncompleteBeta(a, b, x, 1.0 - x);
}

}  // namespace affectix
