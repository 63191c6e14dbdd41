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
#include <vector>

#include "classify/classifier.hpp"

namespace affectix::internal {
namespace {

// Score is the inverse-distance-weighted fraction of class-1 neighbours.
// Neighbours at distance zero, when present, take the whole vote.
class NearestNeighbors : public Classifier {
 public:
  explicit NearestNeighbors(int k) : k_(k) {}

  void Fit(const Eigen::MatrixXd& x, const Eigen::VectorXi& y) override {
    x_ = x;
    y_ = y;
  }

  double Score(const Eigen::VectorXd& sample) const override {
    const auto n = static_cast<std::size_t>(x_.rows());
    std::vector<double> dist(n);
    for (std::size_t i = 0; i < n; ++i) {
      dist[i] = (x_.row(static_cast<Eigen::Index>(i)).transpose() - sample).norm();
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(k_), n);
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k),
                      order.end(), [&](std::size_t a, std::size_t b) {
                        return dist[a] < dist[b] || (dist[a] == dist[b] && a < b);
                      });

    double exact_votes = 0.0;
    double exact_total = 0.0;
    double weighted_votes = 0.0;
    double weighted_total = 0.0;
    for (std::size_t r = 0; r < k; ++r) {
      const std::size_t i = order[r];
      const double label = static_cast<double>(y_[static_cast<Eigen::Index>(i)]);
      if (dist[i] == 0.0) {
        exact_votes += label;
        exact_total += 1.0;
      } else {
        weighted_votes += label / dist[i];
        weighted_total += 1.0 / dist[i];
      }
    }
    if (exact_total > 0.0) return exact_votes / exact_total;
    return weighted_votes / weighted_total;
  }

 private:
  int k_;
  Eigen::MatrixXd x_;
  Eigen::VectorXi y_;
};

}  // namespace

std::unique_ptr<Classifier> MakeNearestNeighbors(int k) {
  return std::make_unique<NearestNeighbors>(k);
}

}  // namespace affectix::internal
