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

Standardizer Standardizer::Fit(const Eigen::MatrixXd& x) {
  Standardizer s;
  s.center = x.colwise().mean().transpose();
  s.scale.resize(x.cols());
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    const double var =
        (x.col(j).array() - s.center[j]).square().sum() / static_cast<double>(x.rows());
    const double sd = std::sqrt(var);
    s.scale[j] = sd > 0.0 ? sd : 1.0;
  }
  return s;
}

Eigen::MatrixXd Standardizer::Apply(const Eigen::MatrixXd& x) const {
  return (x.rowwise() - center.transpose()).array().rowwise() /
         scale.transpose().array();
}

Eigen::VectorXd Standardizer::Apply(const Eigen::VectorXd& sample) const {
  return (sample - center).cwiseQuotient(scale);
}

}  // namespace affectix::internal
