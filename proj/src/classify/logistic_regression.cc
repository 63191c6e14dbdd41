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

#include "affectix/logistic_regression.hpp"

#include <cmath>

#include "affectix/error.hpp"
#include "classify/classifier.hpp"

namespace affectix {
namespace {

// log(1 + exp(z)) without overflow.
double Softplus(double z) {
  return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
}

Eigen::MatrixXd WithIntercept(const Eigen::MatrixXd& x) {
  Eigen::MatrixXd design(x.rows(), x.cols() + 1);
  design.col(0).setOnes();
  design.rightCols(x.cols()) = x;
  return design;
}

}  // namespace

double LogisticObjective(const Eigen::VectorXd& params,
                         const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                         double lambda) {
  const Eigen::VectorXd z = WithIntercept(x) * params;
  double loss = 0.0;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    loss += Softplus(z[i]) - y[i] * z[i];
  }
  return loss + 0.5 * lambda * params.tail(params.size() - 1).squaredNorm();
}

Eigen::VectorXd LogisticGradient(const Eigen::VectorXd& params,
                                 const Eigen::MatrixXd& x,
                                 const Eigen::VectorXd& y, double lambda) {
  const Eigen::MatrixXd design = WithIntercept(x);
  const Eigen::VectorXd z = design * params;
  Eigen::VectorXd residual(z.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    residual[i] = internal::Sigmoid(z[i]) - y[i];
  }
  Eigen::VectorXd grad = design.transpose() * residual;
  grad.tail(grad.size() - 1) += lambda * params.tail(params.size() - 1);
  return grad;
}

void LogisticRegression::Fit(const Eigen::MatrixXd& x, const Eigen::VectorXd& y) {
  if (x.rows() == 0 || x.rows() != y.size()) {
    throw Error(ErrorKind::kArgument, "logistic regression: bad training shape");
  }
  const auto standardizer = internal::Standardizer::Fit(x);
  center_ = standardizer.center;
  scale_ = standardizer.scale;
  const Eigen::MatrixXd xs = standardizer.Apply(x);

  const Eigen::MatrixXd design = WithIntercept(xs);
  const Eigen::MatrixXd gram = design.transpose() * design;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram,
                                                     Eigen::EigenvaluesOnly);
  const double lipschitz = 0.25 * eig.eigenvalues().maxCoeff() + options_.lambda;
  const double step = 1.0 / lipschitz;

  params_ = Eigen::VectorXd::Zero(design.cols());
  converged_ = false;
  iterations_ = 0;
  while (iterations_ < options_.max_iterations) {
    const Eigen::VectorXd grad =
        LogisticGradient(params_, xs, y, options_.lambda);
    if (grad.lpNorm<Eigen::Infinity>() < options_.gradient_tolerance) {
      converged_ = true;
      break;
    }
    params_ -= step * grad;
    ++iterations_;
  }
}

double LogisticRegression::Probability(const Eigen::VectorXd& x) const {
  const Eigen::VectorXd xs = (x - center_).cwiseQuotient(scale_);
  return internal::Sigmoid(params_[0] + params_.tail(xs.size()).dot(xs));
}

namespace internal {
namespace {

class LogisticRegressionClassifier : public Classifier {
 public:
  void Fit(const Eigen::MatrixXd& x, const Eigen::VectorXi& y) override {
    model_.Fit(x, y.cast<double>());
  }
  double Score(const Eigen::VectorXd& sample) const override {
    return model_.Probability(sample);
  }

 private:
  LogisticRegression model_;
};

}  // namespace

std::unique_ptr<Classifier> MakeLogisticRegression() {
  return std::make_unique<LogisticRegressionClassifier>();
}

}  // namespace internal
}  // namespace affectix
