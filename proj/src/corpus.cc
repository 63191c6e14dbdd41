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

#include "affectix/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <iterator>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <thread>
#include <utility>
#include <variant>

#include "affectix/csv.hpp"
#include "affectix/error.hpp"
#include "unicode.hpp"

namespace affectix {
namespace {

namespace fs = std::filesystem;

bool EscapesRoot(const std::string& path) {
  const fs::path p(path);
  if (p.is_absolute() || p.has_root_name() || p.has_root_directory()) {
    return true;
  }
  const fs::path normal = p.lexically_normal();
  if (normal.empty()) return true;
  const auto first = *normal.begin();
  return first == "..";
}

std::optional<std::string> ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::string data((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  if (in.bad()) return std::nullopt;
  return data;
}

using Outcome = std::variant<ScoredDocument, SkippedDocument>;

Outcome ScoreEntry(const CorpusManifest& manifest, const ManifestEntry& entry,
                   const EmotionWordList& list,
                   const AdjectiveLexicon& adjectives,
                   const ScoringOptions& options) {
  const auto text = ReadFile(manifest.Resolve(entry));
  if (!text) return SkippedDocument{entry.doc_id, entry.label, "unreadable file"};
  std::string_view view = *text;
  if (view.starts_with("\xEF\xBB\xBF")) view.remove_prefix(3);
  if (!unicode::IsValidUtf8(view)) {
    return SkippedDocument{entry.doc_id, entry.label, "invalid UTF-8"};
  }
  const Document doc = SegmentDocument(entry.doc_id, view, *options.abbreviations);
  if (doc.sentences.empty()) {
    return SkippedDocument{entry.doc_id, entry.label, "empty after segmentation"};
  }
  ScoredDocument scored;
  scored.label = entry.label;
  scored.profile = ProfileDocument(doc, list, options.std_mode);
  scored.adjective_rate = AdjectiveRate(doc, adjectives);
  scored.n_tokens = doc.TokenCount();
  return scored;
}

}  // namespace

std::vector<std::string> CorpusManifest::Labels() const {
  std::set<std::string> labels;
  for (const auto& e : entries) labels.insert(e.label);
  return {labels.begin(), labels.end()};
}

CorpusManifest ParseManifest(std::string_view csv_text, const fs::path& root,
                             bool check_files) {
  if (csv_text.starts_with("\xEF\xBB\xBF")) csv_text.remove_prefix(3);
  const auto records = csv::Parse(csv_text);
  if (records.empty()) throw Error(ErrorKind::kManifest, "manifest is empty");

  const auto& header = records.front();
  int col_id = -1, col_path = -1, col_label = -1;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == "doc_id") col_id = static_cast<int>(i);
    if (header[i] == "path") col_path = static_cast<int>(i);
    if (header[i] == "label") col_label = static_cast<int>(i);
  }
  if (col_id < 0 || col_path < 0 || col_label < 0 || header.size() != 3) {
    throw Error(ErrorKind::kManifest,
                "manifest header must be 'doc_id,path,label'");
  }

  CorpusManifest manifest;
  manifest.root = root;
  std::set<std::string, std::less<>> ids;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    const std::string where = "manifest row " + std::to_string(r + 1);
    if (rec.size() != 3) {
      throw Error(ErrorKind::kManifest,
                  where + ": expected 3 fields, found " + std::to_string(rec.size()));
    }
    ManifestEntry e{rec[col_id], rec[col_path], rec[col_label]};
    if (e.doc_id.empty()) throw Error(ErrorKind::kManifest, where + ": empty doc_id");
    if (e.label.empty()) throw Error(ErrorKind::kManifest, where + ": empty label");
    if (!ids.insert(e.doc_id).second) {
      throw Error(ErrorKind::kManifest, "duplicate doc_id '" + e.doc_id + "'");
    }
    if (EscapesRoot(e.path)) {
      throw Error(ErrorKind::kManifest, "path '" + e.path + "' of doc_id '" +
                                            e.doc_id + "' escapes the corpus root");
    }
    if (check_files && !fs::is_regular_file(manifest.Resolve(e))) {
      throw Error(ErrorKind::kManifest, "file '" + e.path + "' of doc_id '" +
                                            e.doc_id + "' does not exist");
    }
    manifest.entries.push_back(std::move(e));
  }
  return manifest;
}

CorpusManifest LoadManifest(const fs::path& path) {
  const auto text = ReadFile(path);
  if (!text || !fs::is_regular_file(path)) {
    throw Error(ErrorKind::kIo, "cannot read manifest '" + path.string() + "'");
  }
  return ParseManifest(*text, path.parent_path());
}

std::vector<double> CorpusRun::MeanEi(std::string_view label) const {
  std::vector<double> out;
  for (const auto& d : documents) {
    if (label.empty() || d.label == label) out.push_back(d.profile.mean_ei);
  }
  return out;
}

std::vector<double> CorpusRun::AdjectiveRates(std::string_view label) const {
  std::vector<double> out;
  for (const auto& d : documents) {
    if (label.empty() || d.label == label) out.push_back(d.adjective_rate);
  }
  return out;
}

std::vector<DocumentProfile> CorpusRun::Profiles() const {
  std::vector<DocumentProfile> out;
  out.reserve(documents.size());
  for (const auto& d : documents) out.push_back(d.profile);
  return out;
}

CorpusRun RunCorpus(const CorpusManifest& manifest, const EmotionWordList& list,
                    const AdjectiveLexicon& adjectives,
                    const ScoringOptions& options) {
  const std::size_t n = manifest.entries.size();
  std::vector<std::optional<Outcome>> outcomes(n);

  unsigned threads = options.threads != 0 ? options.threads
                                          : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        outcomes[i] = ScoreEntry(manifest, manifest.entries[i], list, adjectives, options);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  CorpusRun run;
  for (auto& outcome : outcomes) {
    if (auto* scored = std::get_if<ScoredDocument>(&*outcome)) {
      run.documents.push_back(std::move(*scored));
    } else {
      run.skipped.push_back(std::get<SkippedDocument>(std::move(*outcome)));
    }
  }
  if (run.documents.empty()) {
    throw Error(ErrorKind::kEmptyDocument,
                "every document in the corpus was skipped (" +
                    std::to_string(run.skipped.size()) + " entries)");
  }
  std::set<std::string> labels;
  for (const auto& d : run.documents) labels.insert(d.label);
  for (const auto& label : labels) {
    run.group_summaries[label] = Summarize(run.MeanEi(label));
    run.adjective_summaries[label] = Summarize(run.AdjectiveRates(label));
  }
  return run;
}

}  // namespace affectix
