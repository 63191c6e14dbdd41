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
#include <limits>
#include <numeric>
#include <vector>

#include "classify/classifier.hpp"

namespace affectix::internal {
namespace {

constexpr std::size_t kMinSamplesSplit = 2;

double Gini(double positives, double total) {
  if (total == 0.0) return 0.0;
  const double p = positives / total;
  return 2.0 * p * (1.0 - p);
}

// CART with Gini impurity. Rows with x[feature] <= threshold go left. Among
// equally good splits the lowest feature, then the lowest threshold, wins.
class DecisionTree : public Classifier {
 public:
  void Fit(const Eigen::MatrixXd& x, const Eigen::VectorXi& y) override {
    nodes_.clear();
    std::vector<std::size_t> rows(static_cast<std::size_t>(x.rows()));
    std::iota(rows.begin(), rows.end(), 0);
    Build(x, y, rows);
  }

  double Score(const Eigen::VectorXd& sample) const override {
    std::size_t at = 0;
    while (nodes_[at].feature >= 0) {
      const Node& node = nodes_[at];
      at = sample[node.feature] <= node.threshold ? node.left : node.right;
    }
    return nodes_[at].score;
  }

 private:
  struct Node {
    Eigen::Index feature = -1;  // -1 for leaves
    double threshold = 0.0;
    std::size_t left = 0;
    std::size_t right = 0;
    double score = 0.0;  // fraction of class 1 among the node's rows
  };

  std::size_t Build(const Eigen::MatrixXd& x, const Eigen::VectorXi& y,
                    std::vector<std::size_t> rows) {
    const std::size_t id = nodes_.size();
    nodes_.emplace_back();

    double positives = 0.0;
    for (std::size_t r : rows) positives += y[static_cast<Eigen::Index>(r)];
    const double total = static_cast<double>(rows.size());
    nodes_[id].score = positives / total;
    if (rows.size() < kMinSamplesSplit || positives == 0.0 || positives == total) {
      return id;
    }

    double best_impurity = std::numeric_limits<double>::infinity();
    Eigen::Index best_feature = -1;
    double best_threshold = 0.0;
    for (Eigen::Index f = 0; f < x.cols(); ++f) {
      std::vector<std::size_t> sorted = rows;
      std::stable_sort(sorted.begin(), sorted.end(), [&](std::size_t a, std::size_t b) {
        return x(static_cast<Eigen::Index>(a), f) < x(static_cast<Eigen::Index>(b), f);
      });
      double left_pos = 0.0;
      for (std::size_t i = 1; i < sorted.size(); ++i) {
        left_pos += y[static_cast<Eigen::Index>(sorted[i - 1])];
        const double lo = x(static_cast<Eigen::Index>(sorted[i - 1]), f);
        const double hi = x(static_cast<Eigen::Index>(sorted[i]), f);
        if (!(lo < hi)) continue;
        const double n_left = static_cast<double>(i);
        const double n_right = total - n_left;
        const double impurity =
            (n_left * Gini(left_pos, n_left) +
             n_right * Gini(positives - left_pos, n_right)) / total;
        if (impurity < best_impurity) {
          best_impurity = impurity;
          best_feature = f;
          double threshold = lo + (hi - lo) / 2.0;
          if (!(threshold < hi)) threshold = lo;
          best_threshold = threshold;
        }
      }
    }
    if (best_feature < 0) return id;  // every feature is constant here

    std::vector<std::size_t> left_rows;
    std::vector<std::size_t> right_rows;
    for (std::size_t r : rows) {
      (x(static_cast<Eigen::Index>(r), best_feature) <= best_threshold ? left_rows
                                                                       : right_rows)
          .push_back(r);
    }
    nodes_[id].feature = best_feature;
    nodes_[id].threshold = best_threshold;
    const std::size_t left = Build(x, y, std::move(left_rows));
    const std::size_t right = Build(x, y, std::move(right_rows));
    nodes_[id].left = left;
    nodes_[id].right = right;
    return id;
  }

  std::vector<Node> nodes_;
};

}  // namespace

std::unique_ptr<Classifier> MakeDecisionTree() {
  return std::make_unique<DecisionTree>();
}

}  // namespace affectix::internal
