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

#include <cmath>
#include <string>
#include <vector>

#include "affectix/classify.hpp"
#include "affectix/error.hpp"
#include "classify/classifier.hpp"

namespace affectix {
namespace {

MetricSummary Summarize(const std::vector<double>& values) {
  MetricSummary s;
  if (values.empty()) return s;
  for (double v : values) s.mean += v;
  s.mean /= static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - s.mean) * (v - s.mean);
  s.std = std::sqrt(ss / static_cast<double>(values.size()));
  return s;
}

}  // namespace

EvalReport CrossValidate(ClassifierId id, const LabeledDataset& ds, int k,
                         std::uint64_t seed) {
  const FoldPlan plan = StratifiedKFold(ds, k, seed);
  const std::vector<std::size_t> canonical = ds.CanonicalOrder();

  EvalReport report;
  report.classifier_id = std::string(ClassifierKey(id));
  report.k = k;
  report.seed = seed;

  std::vector<double> accuracies;
  std::vector<double> aucs;
  std::vector<double> f1s;
  for (int fold = 0; fold < k; ++fold) {
    std::vector<LabeledRow> train_rows;
    std::vector<FeatureVector> test_features;
    std::vector<int> truth;
    for (std::size_t idx : canonical) {
      const LabeledRow& row = ds.rows()[idx];
      if (plan.assignments[idx] == fold) {
        test_features.push_back(row.features);
        truth.push_back(row.label);
      } else {
        train_rows.push_back(row);
      }
    }
    // With k equal to a class size a training fold keeps a single row of that
    // class, which LabeledDataset would reject.
    const std::vector<Prediction> predictions =
        internal::FitPredictRows(id, train_rows, test_features);

    std::vector<int> labels;
    std::vector<double> scores;
    for (const auto& p : predictions) {
      labels.push_back(p.label);
      scores.push_back(p.score);
    }
    FoldMetrics m;
    m.accuracy = Accuracy(labels, truth);
    m.f1 = F1Score(labels, truth);
    try {
      m.roc_auc = RocAuc(scores, truth);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kUndefinedMetric) throw;
      ++report.auc_excluded_folds;
    }
    accuracies.push_back(m.accuracy);
    f1s.push_back(m.f1);
    if (m.roc_auc) aucs.push_back(*m.roc_auc);
    report.per_fold.push_back(m);
  }
  report.accuracy = Summarize(accuracies);
  report.roc_auc = Summarize(aucs);
  report.f1 = Summarize(f1s);
  return report;
}

}  // namespace affectix
