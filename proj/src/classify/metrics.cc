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

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "affectix/classify.hpp"
#include "affectix/error.hpp"

namespace affectix {
namespace {

void CheckPair(std::size_t a, std::size_t b, std::string_view what) {
  if (a != b) {
    throw Error(ErrorKind::kArgument,
                std::string(what) + ": length mismatch (" + std::to_string(a) +
                    " vs " + std::to_string(b) + ")");
  }
  if (a == 0) throw Error(ErrorKind::kArgument, std::string(what) + ": empty input");
}

}  // namespace

double Accuracy(std::span<const int> predicted, std::span<const int> truth) {
  CheckPair(predicted.size(), truth.size(), "accuracy");
  std::size_t hits = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) hits += predicted[i] == truth[i];
  return static_cast<double>(hits) / static_cast<double>(truth.size());
}

double RocAuc(std::span<const double> scores, std::span<const int> labels) {
  CheckPair(scores.size(), labels.size(), "roc_auc");
  const std::size_t n = scores.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

  // Sum of mid-ranks (1-based) held by the positives.
  double positive_rank_sum = 0.0;
  std::size_t n_pos = 0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && scores[order[j]] == scores[order[i]]) ++j;
    const double mid_rank = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t r = i; r < j; ++r) {
      if (labels[order[r]] == 1) {
        positive_rank_sum += mid_rank;
        ++n_pos;
      }
    }
    i = j;
  }
  const std::size_t n_neg = n - n_pos;
  if (n_pos == 0 || n_neg == 0) {
    throw Error(ErrorKind::kUndefinedMetric,
                "roc_auc is undefined when only one class is present");
  }
  const double np = static_cast<double>(n_pos);
  const double u = positive_rank_sum - np * (np + 1.0) / 2.0;
  return u / (np * static_cast<double>(n_neg));
}

double F1Score(std::span<const int> predicted, std::span<const int> truth) {
  CheckPair(predicted.size(), truth.size(), "f1");
  double tp = 0.0;
  double fp = 0.0;
  double fn = 0.0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    if (predicted[i] == 1 && truth[i] == 1) tp += 1.0;
    if (predicted[i] == 1 && truth[i] != 1) fp += 1.0;
    if (predicted[i] != 1 && truth[i] == 1) fn += 1.0;
  }
  // 2PR / (P + R) reduces to 2TP / (2TP + FP + FN).
  const double denom = 2.0 * tp + fp + fn;
  return tp == 0.0 ? 0.0 : 2.0 * tp / denom;
}

}  // namespace affectix
