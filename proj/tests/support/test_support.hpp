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

#ifndef AFFECTIX_TESTS_TEST_SUPPORT_HPP_
#define AFFECTIX_TESTS_TEST_SUPPORT_HPP_

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "affectix/lexicon.hpp"

namespace affectix::testing {

inline std::filesystem::path DataDir() { return AFFECTIX_TEST_DATA_DIR; }

inline std::filesystem::path FixtureLexiconPath() {
  return DataDir() / "lexicon" / "fixture_dal.tsv";
}

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("affectix-test-" + std::to_string(rd()) + "-" +
             std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(std::string_view name) const {
    return path_ / name;
  }

  std::filesystem::path Write(std::string_view name,
                              std::string_view contents) const {
    const auto p = path_ / name;
    std::filesystem::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    out << contents;
    return p;
  }

 private:
  std::filesystem::path path_;
};

inline std::string ReadFile(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<std::string> ListFiles(const std::filesystem::path& dir) {
  std::vector<std::string> names;
  if (!std::filesystem::exists(dir)) return names;
  for (const auto& e : std::filesystem::recursive_directory_iterator(dir)) {
    if (e.is_regular_file()) {
      names.push_back(std::filesystem::relative(e.path(), dir).string());
    }
  }
  std::sort(names.begin(), names.end());
  return names;
}

// Lexicon with words w00..w{n-1} and the given pleasantness values.
inline AffectLexicon MakeLexicon(const std::vector<double>& pleasantness) {
  std::vector<DalEntry> entries;
  for (std::size_t i = 0; i < pleasantness.size(); ++i) {
    std::string word = "w";
    if (i < 10) word += '0';
    word += std::to_string(i);
    entries.push_back({word, pleasantness[i], 1.0, 1.0});
  }
  return AffectLexicon(std::move(entries), "test");
}

// Lexicon whose positive 20% tail is exactly \p emotional, padded with
// "pos_pad" words if needed; the negative tail holds "neg_pad" words and the
// middle holds "mid" fillers.
inline AffectLexicon MakeLexiconWithTail(
    const std::vector<std::string>& emotional) {
  const std::size_t m = std::max<std::size_t>(2, emotional.size());
  std::vector<DalEntry> entries;
  for (std::size_t i = 0; i < m; ++i) {
    const std::string word = i < emotional.size()
                                 ? emotional[i]
                                 : "pos_pad" + std::to_string(i);
    entries.push_back({word, 3.0, 1.0, 1.0});
    entries.push_back({"neg_pad" + std::to_string(i), 1.0, 1.0, 1.0});
  }
  for (std::size_t i = 0; i < 3 * m; ++i) {
    entries.push_back({"mid" + std::to_string(i), 2.0, 1.0, 1.0});
  }
  return AffectLexicon(std::move(entries), "tail");
}

}  // namespace affectix::testing

#endif  // AFFECTIX_TESTS_TEST_SUPPORT_HPP_
