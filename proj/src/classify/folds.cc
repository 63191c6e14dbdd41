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
#include <random>
#include <string>
#include <vector>

#include "affectix/classify.hpp"
#include "affectix/error.hpp"

namespace affectix {
namespace {

// Uniform draw from [0, bound) by rejection. std::uniform_int_distribution
// is implementation-defined, which would make fold plans differ across
// standard libraries.
std::uint64_t UniformBelow(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % bound + 1) % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw > limit);
  return draw % bound;
}

void Shuffle(std::vector<std::size_t>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(UniformBelow(rng, i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace

FoldPlan StratifiedKFold(const LabeledDataset& ds, int k, std::uint64_t seed) {
  const std::size_t smallest = std::min(ds.ClassCount(0), ds.ClassCount(1));
  if (k < 2 || static_cast<std::size_t>(k) > smallest) {
    throw Error(ErrorKind::kArgument,
                "k must lie in [2, " + std::to_string(smallest) +
                    "] (smallest class size); got " + std::to_string(k));
  }

  std::vector<std::size_t> by_class[2];
  for (std::size_t idx : ds.CanonicalOrder()) {
    by_class[ds.rows()[idx].label].push_back(idx);
  }

  std::mt19937_64 rng(seed);
  FoldPlan plan;
  plan.k = k;
  plan.seed = seed;
  plan.assignments.assign(ds.size(), -1);
  std::size_t position = 0;
  for (auto& members : by_class) {
    Shuffle(members, rng);
    for (std::size_t idx : members) {
      plan.assignments[idx] = static_cast<int>(position % static_cast<std::size_t>(k));
      ++position;
    }
  }
  return plan;
}

}  // namespace affectix
