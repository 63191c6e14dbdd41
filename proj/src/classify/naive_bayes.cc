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
#include <numbers>

#include "classify/classifier.hpp"

namespace affectix::internal {
namespace {

constexpr double kVarianceFloor = 1e-9;

class GaussianNaiveBayes : public Classifier {
 public:
  void Fit(const Eigen::MatrixXd& x, const Eigen::VectorXi& y) override {
    const Eigen::Index d = x.cols();
    for (int c = 0; c < 2; ++c) {
      mean_[c] = Eigen::VectorXd::Zero(d);
      var_[c] = Eigen::VectorXd::Zero(d);
    }
    double count[2] = {0.0, 0.0};
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
      mean_[y[i]] += x.row(i).transpose();
      count[y[i]] += 1.0;
    }
    for (int c = 0; c < 2; ++c) mean_[c] /= count[c];
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
      var_[y[i]] += (x.row(i).transpose() - mean_[y[i]]).array().square().matrix();
    }
    const double n = count[0] + count[1];
    for (int c = 0; c < 2; ++c) {
      var_[c] /= count[c];
      var_[c] = var_[c].cwiseMax(kVarianceFloor);
      log_prior_[c] = std::log(count[c] / n);
    }
  }

  // Posterior of class 1.
  double Score(const Eigen::VectorXd& sample) const override {
    double log_joint[2];
    for (int c = 0; c < 2; ++c) {
      double l = log_prior_[c];
      for (Eigen::Index j = 0; j < sample.size(); ++j) {
        const double diff = sample[j] - mean_[c][j];
        l -= 0.5 * std::log(2.0 * std::numbers::pi * var_[c][j]) +
             diff * diff / (2.0 * var_[c][j]);
      }
      log_joint[c] = l;
    }
    return Sigmoid(log_joint[1] - log_joint[0]);
  }

 private:
  Eigen::VectorXd mean_[2];
  Eigen::VectorXd var_[2];
  double log_prior_[2] = {0.0, 0.0};
};

}  // namespace

std::unique_ptr<Classifier> MakeGaussianNaiveBayes() {
  return std::make_unique<GaussianNaiveBayes>();
}

}  // namespace affectix::internal
