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

#include "classify/classifier.hpp"

namespace affectix::internal {
namespace {

constexpr double kRidge = 1e-6;

// Two-class Gaussian discriminant with shared covariance. The posterior is
// sigmoid(w . x + b) with w = S^-1 (mu1 - mu0) and
// b = -w . (mu0 + mu1) / 2 + log(n1 / n0). Fitted in standardized feature
// space so the ridge term is scale-free.
class LinearDiscriminant : public Classifier {
 public:
  void Fit(const Eigen::MatrixXd& x, const Eigen::VectorXi& y) override {
    standardizer_ = Standardizer::Fit(x);
    const Eigen::MatrixXd xs = standardizer_.Apply(x);
    const Eigen::Index d = xs.cols();

    Eigen::VectorXd mean[2] = {Eigen::VectorXd::Zero(d),
                               Eigen::VectorXd::Zero(d)};
    double count[2] = {0.0, 0.0};
    for (Eigen::Index i = 0; i < xs.rows(); ++i) {
      mean[y[i]] += xs.row(i).transpose();
      count[y[i]] += 1.0;
    }
    mean[0] /= count[0];
    mean[1] /= count[1];

    Eigen::MatrixXd scatter = Eigen::MatrixXd::Zero(d, d);
    for (Eigen::Index i = 0; i < xs.rows(); ++i) {
      const Eigen::VectorXd centered = xs.row(i).transpose() - mean[y[i]];
      scatter += centered * centered.transpose();
    }
    const double dof = xs.rows() > 2 ? static_cast<double>(xs.rows() - 2)
                                     : static_cast<double>(xs.rows());
    Eigen::MatrixXd cov = scatter / dof;
    cov.diagonal().array() += kRidge;

    weights_ = cov.ldlt().solve(mean[1] - mean[0]);
    bias_ = -0.5 * weights_.dot(mean[0] + mean[1]) +
            std::log(count[1] / count[0]);
  }

  double Score(const Eigen::VectorXd& sample) const override {
    return Sigmoid(weights_.dot(standardizer_.Apply(sample)) + bias_);
  }

 private:
  Standardizer standardizer_;
  Eigen::VectorXd weights_;
  double bias_ = 0.0;
};

}  // namespace

std::unique_ptr<Classifier> MakeLinearDiscriminant() {
  return std::make_unique<LinearDiscriminant>();
}

}  // namespace affectix::internal
