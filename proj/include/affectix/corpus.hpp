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

// Labeled document collections on disk and batch scoring.
//
// Manifest CSV (RFC 4180, UTF-8) with the header `doc_id,path,label`. Paths
// are relative to the manifest's directory and may not escape it.

#ifndef AFFECTIX_CORPUS_HPP_
#define AFFECTIX_CORPUS_HPP_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "affectix/intensity.hpp"
#include "affectix/lexicon.hpp"
#include "affectix/stats.hpp"
#include "affectix/textproc.hpp"

namespace affectix {

struct ManifestEntry {
  std::string doc_id;
  std::string path;  // relative to the manifest root
  std::string label;
};

struct CorpusManifest {
  std::filesystem::path root;
  std::vector<ManifestEntry> entries;

  // Distinct labels, sorted.
  std::vector<std::string> Labels() const;
  std::filesystem::path Resolve(const ManifestEntry& entry) const {
    return root / entry.path;
  }
};

// Throws Error(kManifest) for a bad header, empty or duplicate doc_id, an
// absolute or escaping path, or (with check_files) a missing file.
CorpusManifest ParseManifest(std::string_view csv_text,
                             const std::filesystem::path& root,
                             bool check_files = true);
// Throws Error(kIo) when the manifest itself cannot be read.
CorpusManifest LoadManifest(const std::filesystem::path& path);

struct ScoredDocument {
  std::string label;
  DocumentProfile profile;
  double adjective_rate = 0.0;
  std::size_t n_tokens = 0;
};

struct SkippedDocument {
  std::string doc_id;
  std::string label;
  std::string reason;
};

struct CorpusRun {
  std::vector<ScoredDocument> documents;  // manifest order
  std::vector<SkippedDocument> skipped;   // manifest order
  // Per label, over documents' mean_ei and adjective_rate (sample sd).
  std::map<std::string, SampleSummary> group_summaries;
  std::map<std::string, SampleSummary> adjective_summaries;

  std::vector<double> MeanEi(std::string_view label = {}) const;
  std::vector<double> AdjectiveRates(std::string_view label = {}) const;
  std::vector<DocumentProfile> Profiles() const;
};

struct ScoringOptions {
  const Abbreviations* abbreviations = &Abbreviations::Default();
  StdMode std_mode = StdMode::kPopulation;
  unsigned threads = 0;  // 0 picks hardware concurrency
};

// Scores every manifest entry. Unreadable files, invalid UTF-8 and documents
// without words are recorded in skipped rather than aborting; throws
// Error(kEmptyDocument) when every document is skipped.
CorpusRun RunCorpus(const CorpusManifest& manifest, const EmotionWordList& list,
                    const AdjectiveLexicon& adjectives,
                    const ScoringOptions& options = {});

}  // namespace affectix

#endif  // AFFECTIX_CORPUS_HPP_
