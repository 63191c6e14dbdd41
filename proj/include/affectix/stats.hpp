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

#ifndef AFFECTIX_STATS_HPP_
#define AFFECTIX_STATS_HPP_

#include <cstddef>
#include <span>
#include <string_view>

namespace affectix {

// Divisor n (the values are the whole population) or n - 1.
enum class StdMode { kPopulation, kSample };

std::string_view StdModeName(StdMode mode);

struct SampleSummary {
  std::size_t n = 0;
  double mean = 0.0;
  double sd = 0.0;  // sample standard deviation; 0 when n == 1
};

enum class TTestKind { kWelch, kPooled };

std::string_view TTestKindName(TTestKind kind);

struct TTestResult {
  double t = 0.0;
  double df = 0.0;
  double p_two_sided = 1.0;
  TTestKind kind = TTestKind::kWelch;
};

// Both throw Error(kArgument) on empty input or non-finite values. A single
// value has standard deviation 0 in either mode.
double Mean(std::span<const double> xs);
double StandardDeviation(std::span<const double> xs, StdMode mode);

SampleSummary Summarize(std::span<const double> xs);

// Two-sided two-sample t-test. Welch uses the Welch-Satterthwaite degrees of
// freedom; pooled is the equal-variance Student test with n_a + n_b - 2.
//
// Throws Error(kArgument) when either sample has fewer than two values and
// Error(kDegenerateTest) when both samples are constant with equal means.
// Constant samples with different means give t = +-inf and p = 0.
TTestResult TwoSampleTTest(std::span<const double> a, std::span<const double> b,
                           TTestKind kind = TTestKind::kWelch);

// P(T <= t) for Student's t with df > 0 degrees of freedom.
double StudentTCdf(double t, double df);

// P(|T| >= |t|), evaluated directly so tiny tail probabilities keep their
// relative accuracy.
double StudentTTwoSidedP(double t, double df);

// I_x(a, b) by Lentz's continued fraction. Throws Error(kNumerical) if the
// fraction fails to converge within 300 iterations.
double RegularizedIncompleteBeta(double a, double b, double x);

}  // namespace affectix

#endif  // AFFECTIX_STATS_HPP_
