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

// Batch commands behind the `affectix` executable. Each command returns a
// process exit code and writes only inside RunConfig::output_dir; when a
// command fails, none of its output files are left behind.

#ifndef AFFECTIX_CLI_HPP_
#define AFFECTIX_CLI_HPP_

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "affectix/classify.hpp"
#include "affectix/lexicon.hpp"
#include "affectix/stats.hpp"

namespace affectix::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitInput = 2,
  kExitDegenerate = 3,
  kExitUnimplemented = 4,
};

inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr int kDefaultFolds = 10;

struct RunConfig {
  std::filesystem::path lexicon_path;
  double lower_frac = kDefaultTailFraction;
  double upper_frac = kDefaultTailFraction;
  StdMode std_mode = StdMode::kPopulation;
  int k_folds = kDefaultFolds;
  std::uint64_t seed = kDefaultSeed;
  FeatureMode feature_mode = FeatureMode::kMeanOnly;
  std::filesystem::path output_dir = ".";
  std::filesystem::path abbrev_path;       // empty: bundled list
  std::filesystem::path adjectives_path;   // empty: bundled list
  std::filesystem::path suffix_rules_path; // empty: bundled rules
  std::vector<std::string> classifiers;    // empty: every implemented one
  TTestKind ttest = TTestKind::kWelch;
  unsigned threads = 0;
};

// Writes profiles.csv, profiles.json, histogram.csv and scatter.csv.
int CmdScore(const RunConfig& config, const std::filesystem::path& manifest,
             std::ostream& out, std::ostream& err);

// Compares mean EI and adjective rate between two corpora; writes
// compare.json.
int CmdCompare(const RunConfig& config, const std::filesystem::path& manifest_a,
               const std::filesystem::path& manifest_b, std::ostream& out,
               std::ostream& err);

// Cross-validates each classifier on per-document features; writes
// table1.csv, classify.json and scatter.csv. The alphabetically first label
// is class 0, the second class 1 (the positive class for F1).
int CmdClassify(const RunConfig& config, const std::filesystem::path& manifest,
                std::ostream& out, std::ostream& err);

int CmdLexiconInfo(const RunConfig& config, std::ostream& out, std::ostream& err);

// score (each corpus) -> compare -> classify, into subdirectories of
// output_dir.
int CmdReplicate(const RunConfig& config, const std::filesystem::path& intense,
                 const std::filesystem::path& neutral,
                 const std::filesystem::path& cohort, std::ostream& out,
                 std::ostream& err);

// Parses argv and dispatches. AFFECTIX_SEED supplies the seed when --seed is
// absent.
int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace affectix::cli

#endif  // AFFECTIX_CLI_HPP_
