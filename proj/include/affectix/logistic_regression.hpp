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

#ifndef AFFECTIX_LOGISTIC_REGRESSION_HPP_
#define AFFECTIX_LOGISTIC_REGRESSION_HPP_

#include <Eigen/Dense>

namespace affectix {

struct LogisticRegressionOptions {
  double lambda = 1.0;
  double gradient_tolerance = 1e-8;
  int max_iterations = 10000;
};

// Negative L2-regularized log-likelihood
//   sum_i [log(1 + exp(z_i)) - y_i z_i] + lambda/2 * |w|^2,
//   z_i = w_0 + x_i . w,
// where params = [w_0, w]. The intercept is not penalized.
double LogisticObjective(const Eigen::VectorXd& params,
                         const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                         double lambda);

// Analytic gradient of LogisticObjective.
Eigen::VectorXd LogisticGradient(const Eigen::VectorXd& params,
                                 const Eigen::MatrixXd& x,
                                 const Eigen::VectorXd& y, double lambda);

// Standardizes features with the training mean and population std (unit
// scale for constant columns), then runs gradient descent with step 1/L,
// L = lambda_max(X'X) / 4 + lambda.
class LogisticRegression {
 public:
  explicit LogisticRegression(LogisticRegressionOptions options = {})
      : options_(options) {}

  void Fit(const Eigen::MatrixXd& x, const Eigen::VectorXd& y);
  double Probability(const Eigen::VectorXd& x) const;

  // Parameters in standardized feature space.
  const Eigen::VectorXd& params() const { return params_; }
  int iterations() const { return iterations_; }
  bool converged() const { return converged_; }

 private:
  LogisticRegressionOptions options_;
  Eigen::VectorXd center_;
  Eigen::VectorXd scale_;
  Eigen::VectorXd params_;
  int iterations_ = 0;
  bool converged_ = false;
};

}  // namespace affectix

#endif  // AFFECTIX_LOGISTIC_REGRESSION_HPP_
