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
#include <array>
#include <cctype>
#include <cmath>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "affectix/classify.hpp"
#include "affectix/error.hpp"
#include "classify/classifier.hpp"

namespace affectix {
namespace {

constexpr std::array<ClassifierId, 5> kImplemented = {
    ClassifierId::kLogReg, ClassifierId::kLda, ClassifierId::kGnb,
    ClassifierId::kKnn, ClassifierId::kDTree};

struct UnimplementedId {
  std::string_view key;
  std::string_view display;
};

constexpr UnimplementedId kUnimplemented[] = {
    {"svc", "SVC"},
    {"gradient_boosting", "GradientBoostingClassifier"},
    {"bagging", "BaggingClassifier"},
    {"random_forest", "RandomForestClassifier"},
};

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

Eigen::VectorXd ToVector(const std::vector<double>& values) {
  return Eigen::Map<const Eigen::VectorXd>(values.data(),
                                           static_cast<Eigen::Index>(values.size()));
}

}  // namespace

std::string_view FeatureModeName(FeatureMode mode) {
  return mode == FeatureMode::kMeanOnly ? "mean" : "mean_std";
}

LabeledDataset::LabeledDataset(std::vector<LabeledRow> rows,
                               std::array<std::string, 2> class_names)
    : rows_(std::move(rows)), class_names_(std::move(class_names)) {
  if (rows_.empty()) throw Error(ErrorKind::kArgument, "dataset is empty");
  const std::size_t width = rows_.front().features.values.size();
  if (width == 0) throw Error(ErrorKind::kArgument, "feature vectors are empty");
  std::set<std::string, std::less<>> ids;
  for (const auto& row : rows_) {
    const auto& id = row.features.subject_id;
    if (row.label != 0 && row.label != 1) {
      throw Error(ErrorKind::kArgument, "label of '" + id + "' is not 0 or 1");
    }
    if (row.features.values.size() != width) {
      throw Error(ErrorKind::kArgument,
                  "feature length mismatch for '" + id + "'");
    }
    for (double v : row.features.values) {
      if (!std::isfinite(v)) {
        throw Error(ErrorKind::kArgument, "non-finite feature for '" + id + "'");
      }
    }
    if (!ids.insert(id).second) {
      throw Error(ErrorKind::kArgument, "duplicate subject id '" + id + "'");
    }
  }
  for (int c = 0; c < 2; ++c) {
    if (ClassCount(c) < 2) {
      throw Error(ErrorKind::kArgument,
                  "class '" + class_names_[c] + "' needs at least 2 rows, has " +
                      std::to_string(ClassCount(c)));
    }
  }
}

std::size_t LabeledDataset::ClassCount(int label) const {
  return static_cast<std::size_t>(std::count_if(
      rows_.begin(), rows_.end(), [label](const LabeledRow& r) { return r.label == label; }));
}

std::vector<std::size_t> LabeledDataset::CanonicalOrder() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) {
    return rows_[a].features.subject_id < rows_[b].features.subject_id;
  });
  return order;
}

LabeledDataset FeaturesFromProfiles(
    std::span<const DocumentProfile> profiles,
    const std::map<std::string, int, std::less<>>& labels, FeatureMode mode,
    std::array<std::string, 2> class_names) {
  std::vector<LabeledRow> rows;
  std::set<std::string, std::less<>> seen;
  rows.reserve(profiles.size());
  for (const auto& p : profiles) {
    if (!seen.insert(p.doc_id).second) {
      throw Error(ErrorKind::kArgument, "duplicate doc_id '" + p.doc_id + "'");
    }
    auto it = labels.find(p.doc_id);
    if (it == labels.end()) {
      throw Error(ErrorKind::kArgument, "no label for doc_id '" + p.doc_id + "'");
    }
    LabeledRow row;
    row.features.subject_id = p.doc_id;
    row.features.values = mode == FeatureMode::kMeanOnly
                              ? std::vector<double>{p.mean_ei}
                              : std::vector<double>{p.mean_ei, p.std_ei};
    row.label = it->second;
    rows.push_back(std::move(row));
  }
  return LabeledDataset(std::move(rows), std::move(class_names));
}

std::span<const ClassifierId> ImplementedClassifiers() { return kImplemented; }

std::string_view ClassifierKey(ClassifierId id) {
  switch (id) {
    case ClassifierId::kLogReg: return "logreg";
    case ClassifierId::kLda: return "lda";
    case ClassifierId::kGnb: return "gnb";
    case ClassifierId::kKnn: return "knn";
    case ClassifierId::kDTree: return "dtree";
  }
  return "";
}

std::string_view ClassifierDisplayName(ClassifierId id) {
  switch (id) {
    case ClassifierId::kLogReg: return "LogisticRegression";
    case ClassifierId::kLda: return "LDA";
    case ClassifierId::kGnb: return "GaussianNB";
    case ClassifierId::kKnn: return "KNeighborsClassifier";
    case ClassifierId::kDTree: return "DecisionTreeClassifier";
  }
  return "";
}

ClassifierId ParseClassifierId(std::string_view name) {
  const std::string lowered = Lower(name);
  for (ClassifierId id : kImplemented) {
    if (lowered == ClassifierKey(id) || lowered == Lower(ClassifierDisplayName(id))) {
      return id;
    }
  }
  for (const auto& u : kUnimplemented) {
    if (lowered == u.key || lowered == Lower(u.display)) {
      throw Error(ErrorKind::kNotImplemented,
                  "classifier '" + std::string(u.key) + "' (" +
                      std::string(u.display) +
                      ") is a known id but is not implemented; available: "
                      "logreg, lda, gnb, knn, dtree");
    }
  }
  throw Error(ErrorKind::kArgument,
              "unknown classifier '" + std::string(name) +
                  "'; available: logreg, lda, gnb, knn, dtree");
}

namespace internal {

std::unique_ptr<Classifier> MakeClassifier(ClassifierId id) {
  switch (id) {
    case ClassifierId::kLogReg: return MakeLogisticRegression();
    case ClassifierId::kLda: return MakeLinearDiscriminant();
    case ClassifierId::kGnb: return MakeGaussianNaiveBayes();
    case ClassifierId::kKnn: return MakeNearestNeighbors();
    case ClassifierId::kDTree: return MakeDecisionTree();
  }
  throw Error(ErrorKind::kArgument, "unknown classifier id");
}

std::vector<Prediction> FitPredictRows(ClassifierId id,
                                       std::span<const LabeledRow> train,
                                       std::span<const FeatureVector> test) {
  if (train.empty()) throw Error(ErrorKind::kArgument, "empty training set");
  const auto n = static_cast<Eigen::Index>(train.size());
  const std::size_t width = train.front().features.values.size();
  const auto d = static_cast<Eigen::Index>(width);
  Eigen::MatrixXd x(n, d);
  Eigen::VectorXi y(n);
  bool seen[2] = {false, false};
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = train[static_cast<std::size_t>(i)];
    if (row.features.values.size() != width) {
      throw Error(ErrorKind::kArgument, "training feature length mismatch ('" +
                                            row.features.subject_id + "')");
    }
    if (row.label != 0 && row.label != 1) {
      throw Error(ErrorKind::kArgument, "training label is not 0 or 1");
    }
    x.row(i) = ToVector(row.features.values).transpose();
    y[i] = row.label;
    seen[row.label] = true;
  }
  if (!seen[0] || !seen[1]) {
    throw Error(ErrorKind::kArgument, "training rows must cover both classes");
  }
  for (const auto& f : test) {
    if (f.values.size() != width) {
      throw Error(ErrorKind::kArgument,
                  "test feature length " + std::to_string(f.values.size()) +
                      " does not match training length " +
                      std::to_string(width) + " ('" + f.subject_id + "')");
    }
  }

  auto model = MakeClassifier(id);
  model->Fit(x, y);
  std::vector<Prediction> out;
  out.reserve(test.size());
  for (const auto& f : test) {
    const double score = model->Score(ToVector(f.values));
    out.push_back({score >= 0.5 ? 1 : 0, score});
  }
  return out;
}

}  // namespace internal

std::vector<Prediction> FitPredict(ClassifierId id, const LabeledDataset& train,
                                   std::span<const FeatureVector> test) {
  return internal::FitPredictRows(id, train.rows(), test);
}

}  // namespace affectix
