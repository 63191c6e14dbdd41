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

// Subject-level classification: feature extraction from document profiles,
// stratified k-fold cross-validation, five binary classifiers and the
// accuracy / ROC AUC / F1 metrics.

#ifndef AFFECTIX_CLASSIFY_HPP_
#define AFFECTIX_CLASSIFY_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "affectix/intensity.hpp"

namespace affectix {

enum class FeatureMode {
  kMeanOnly,    // [mean_ei]
  kMeanAndStd,  // [mean_ei, std_ei]
};

std::string_view FeatureModeName(FeatureMode mode);

struct FeatureVector {
  std::string subject_id;
  std::vector<double> values;
};

struct LabeledRow {
  FeatureVector features;
  int label = 0;  // 0 or 1
};

// A binary classification data set. Construction validates: labels in
// {0, 1}, at least two rows per class, a uniform non-zero feature length,
// finite values and unique subject ids.
class LabeledDataset {
 public:
  LabeledDataset(std::vector<LabeledRow> rows,
                 std::array<std::string, 2> class_names = {"0", "1"});

  const std::vector<LabeledRow>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }
  std::size_t feature_count() const { return rows_.front().features.values.size(); }
  const std::array<std::string, 2>& class_names() const { return class_names_; }
  std::size_t ClassCount(int label) const;

  // Row indices ordered by subject id. Fold assignment and training order
  // follow this order, so results do not depend on input row order.
  std::vector<std::size_t> CanonicalOrder() const;

 private:
  std::vector<LabeledRow> rows_;
  std::array<std::string, 2> class_names_;
};

// One row per profile. Throws Error(kArgument) naming the doc_id when a
// label is missing or a doc_id repeats.
LabeledDataset FeaturesFromProfiles(
    std::span<const DocumentProfile> profiles,
    const std::map<std::string, int, std::less<>>& labels, FeatureMode mode,
    std::array<std::string, 2> class_names = {"0", "1"});

struct FoldPlan {
  int k = 0;
  std::vector<int> assignments;  // row index -> fold
  std::uint64_t seed = 0;
};

// Shuffles each class with a seeded mt19937_64 (after canonical ordering),
// then deals class 0 followed by class 1 round-robin into the folds.
// Throws Error(kArgument) unless 2 <= k <= smallest class count.
FoldPlan StratifiedKFold(const LabeledDataset& ds, int k, std::uint64_t seed);

enum class ClassifierId { kLogReg, kLda, kGnb, kKnn, kDTree };

std::span<const ClassifierId> ImplementedClassifiers();
std::string_view ClassifierKey(ClassifierId id);          // "logreg"
std::string_view ClassifierDisplayName(ClassifierId id);  // "LogisticRegression"

// Accepts the keys (and display names, case-insensitively). The known but
// unimplemented ids (svc, gradient_boosting, bagging, random_forest) throw
// Error(kNotImplemented); anything else throws Error(kArgument).
ClassifierId ParseClassifierId(std::string_view name);

struct Prediction {
  int label = 0;       // score >= 0.5
  double score = 0.0;  // continuous ranking value for class 1
};

// Classifier settings:
//   logreg  L2 (lambda = 1) logistic regression fitted by full-batch gradient
//           descent on standardized features; stops when the gradient
//           inf-norm drops below 1e-8 or after 10000 iterations.
//   lda     two-class linear discriminant with pooled covariance (+1e-6 on
//           the diagonal), on standardized features.
//   gnb     Gaussian naive Bayes, variance floor 1e-9.
//   knn     k = 5, Euclidean, inverse-distance-weighted vote; equal distances
//           resolve to the lower training row.
//   dtree   CART, Gini impurity, unlimited depth, splits nodes of >= 2 rows
//           at midpoints between distinct values.
//
// Throws Error(kArgument) on feature-length mismatch.
std::vector<Prediction> FitPredict(ClassifierId id, const LabeledDataset& train,
                                   std::span<const FeatureVector> test);

double Accuracy(std::span<const int> predicted, std::span<const int> truth);

// Mann-Whitney form: (#(pos, neg) pairs ranked correctly + 0.5 * #ties) /
// (n_pos * n_neg). O(n log n). Throws Error(kUndefinedMetric) unless both
// classes are present.
double RocAuc(std::span<const double> scores, std::span<const int> labels);

// F1 for class 1; 0 when precision + recall is 0.
double F1Score(std::span<const int> predicted, std::span<const int> truth);

struct MetricSummary {
  double mean = 0.0;
  double std = 0.0;  // population std over folds
};

struct FoldMetrics {
  double accuracy = 0.0;
  std::optional<double> roc_auc;  // empty when the test fold has one class
  double f1 = 0.0;
};

struct EvalReport {
  std::string classifier_id;
  int k = 0;
  std::uint64_t seed = 0;
  MetricSummary accuracy;
  MetricSummary roc_auc;
  MetricSummary f1;
  std::size_t auc_excluded_folds = 0;
  std::vector<FoldMetrics> per_fold;
};

EvalReport CrossValidate(ClassifierId id, const LabeledDataset& ds, int k,
                         std::uint64_t seed);

}  // namespace affectix

#endif  // AFFECTIX_CLASSIFY_HPP_
