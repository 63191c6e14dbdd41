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

#ifndef AFFECTIX_SRC_CLASSIFY_CLASSIFIER_HPP_
#define AFFECTIX_SRC_CLASSIFY_CLASSIFIER_HPP_

#include <cmath>
#include <memory>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "affectix/classify.hpp"

namespace affectix::internal {

// x holds one sample per row; y holds 0/1 labels. Fit requires at least one
// row of each class.
class Classifier {
 public:
  virtual ~Classifier() = default;
  virtual void Fit(const Eigen::MatrixXd& x, const Eigen::VectorXi& y) = 0;
  virtual double Score(const Eigen::VectorXd& sample) const = 0;
};

std::unique_ptr<Classifier> MakeLogisticRegression();
std::unique_ptr<Classifier> MakeLinearDiscriminant();
std::unique_ptr<Classifier> MakeGaussianNaiveBayes();
std::unique_ptr<Classifier> MakeNearestNeighbors(int k = 5);
std::unique_ptr<Classifier> MakeDecisionTree();

std::unique_ptr<Classifier> MakeClassifier(ClassifierId id);

// FitPredict without the LabeledDataset invariants: train needs at least one
// row of each class and a uniform feature length.
std::vector<Prediction> FitPredictRows(ClassifierId id,
                                       std::span<const LabeledRow> train,
                                       std::span<const FeatureVector> test);

// Mean and population std per column; constant columns get unit scale.
struct Standardizer {
  Eigen::VectorXd center;
  Eigen::VectorXd scale;

  static Standardizer Fit(const Eigen::MatrixXd& x);
  Eigen::MatrixXd Apply(const Eigen::MatrixXd& x) const;
  Eigen::VectorXd Apply(const Eigen::VectorXd& sample) const;
};

inline double Sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

}  // namespace affectix::internal

#endif  // AFFECTIX_SRC_CLASSIFY_CLASSIFIER_HPP_
