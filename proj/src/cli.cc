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

#include "affectix/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <system_error>
#include <tuple>
#include <utility>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "affectix/corpus.hpp"
#include "affectix/error.hpp"
#include "affectix/intensity.hpp"
#include "affectix/report.hpp"
#include "affectix/textproc.hpp"

namespace affectix::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

int ExitFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDegenerateTest: return kExitDegenerate;
    case ErrorKind::kNotImplemented: return kExitUnimplemented;
    case ErrorKind::kNumerical: return kExitInternal;
    default: return kExitInput;
  }
}

int Guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    fmt::print(err, "error: {}: {}\n", ErrorKindName(e.kind()), e.what());
    return ExitFor(e.kind());
  } catch (const fs::filesystem_error& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitInput;
  } catch (const std::exception& e) {
    fmt::print(err, "internal error: {}\n", e.what());
    return kExitInternal;
  }
}

// Files are staged in memory and written together; if any write fails the
// ones already written are removed.
class OutputSet {
 public:
  void Add(std::string name, std::string content) {
    files_.emplace_back(std::move(name), std::move(content));
  }

  void Commit(const fs::path& dir) const {
    fs::create_directories(dir);
    std::vector<fs::path> written;
    for (const auto& [name, content] : files_) {
      const fs::path target = dir / name;
      const fs::path staging = dir / (name + ".partial");
      std::ofstream out(staging, std::ios::binary | std::ios::trunc);
      out << content;
      out.close();
      std::error_code ec;
      if (out) fs::rename(staging, target, ec);
      if (!out || ec) {
        fs::remove(staging, ec);
        for (const auto& p : written) fs::remove(p, ec);
        throw Error(ErrorKind::kIo, "cannot write '" + target.string() + "'");
      }
      written.push_back(target);
    }
  }

 private:
  std::vector<std::pair<std::string, std::string>> files_;
};

struct Resources {
  AffectLexicon lexicon;
  EmotionWordList list;
  Abbreviations abbreviations;
  AdjectiveLexicon adjectives;
};

Resources LoadResources(const RunConfig& config) {
  if (config.lexicon_path.empty()) {
    throw Error(ErrorKind::kArgument, "--lexicon is required");
  }
  AffectLexicon lexicon = LoadDal(config.lexicon_path);
  EmotionWordList list =
      BuildEmotionList(lexicon, config.lower_frac, config.upper_frac);
  Abbreviations abbreviations = config.abbrev_path.empty()
                                    ? Abbreviations::Default()
                                    : Abbreviations::Load(config.abbrev_path);
  AdjectiveLexicon adjectives =
      LoadAdjectiveLexicon(config.adjectives_path, config.suffix_rules_path);
  return {std::move(lexicon), std::move(list), std::move(abbreviations),
          std::move(adjectives)};
}

CorpusRun Score(const RunConfig& config, const Resources& res,
                const fs::path& manifest_path) {
  const CorpusManifest manifest = LoadManifest(manifest_path);
  ScoringOptions options;
  options.abbreviations = &res.abbreviations;
  options.std_mode = config.std_mode;
  options.threads = config.threads;
  return RunCorpus(manifest, res.list, res.adjectives, options);
}

json RunHeader(const RunConfig& config, const Resources& res) {
  return {{"lexicon", res.lexicon.source_id()},
          {"lexicon_size", res.lexicon.size()},
          {"lower_frac", config.lower_frac},
          {"upper_frac", config.upper_frac},
          {"negative_words", res.list.negative().size()},
          {"positive_words", res.list.positive().size()},
          {"std_mode", StdModeName(config.std_mode)}};
}

std::string GroupName(const CorpusRun& run, const fs::path& manifest) {
  if (run.group_summaries.size() == 1) return run.group_summaries.begin()->first;
  return manifest.stem().string();
}

std::vector<ClassifierId> SelectClassifiers(const RunConfig& config) {
  if (config.classifiers.empty()) {
    const auto all = ImplementedClassifiers();
    return {all.begin(), all.end()};
  }
  std::vector<ClassifierId> ids;
  for (const auto& name : config.classifiers) {
    const ClassifierId id = ParseClassifierId(name);
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
  }
  return ids;
}

}  // namespace

int CmdScore(const RunConfig& config, const fs::path& manifest_path,
             std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    const Resources res = LoadResources(config);
    const CorpusRun run = Score(config, res, manifest_path);

    json doc = RunHeader(config, res);
    doc["manifest"] = manifest_path.filename().string();
    doc.update(report::ToJson(run));

    OutputSet outputs;
    outputs.Add("profiles.csv", report::ProfilesCsv(run));
    outputs.Add("profiles.json", doc.dump(2) + "\n");
    outputs.Add("histogram.csv", report::HistogramCsv(run));
    outputs.Add("scatter.csv", report::ScatterCsv(run));
    outputs.Commit(config.output_dir);

    fmt::print(out, "scored {} documents, skipped {}\n", run.documents.size(),
               run.skipped.size());
    for (const auto& s : run.skipped) {
      fmt::print(out, "  skipped {}: {}\n", s.doc_id, s.reason);
    }
    for (const auto& [label, s] : run.group_summaries) {
      const auto& adj = run.adjective_summaries.at(label);
      fmt::print(out, "  {}: n={} mean_ei={:.4f} +- {:.4f} adjective_rate={:.4f} +- {:.4f}\n",
                 label, s.n, s.mean, s.sd, adj.mean, adj.sd);
    }
    return static_cast<int>(kExitOk);
  });
}

int CmdCompare(const RunConfig& config, const fs::path& manifest_a,
               const fs::path& manifest_b, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    const Resources res = LoadResources(config);
    const CorpusRun run_a = Score(config, res, manifest_a);
    const CorpusRun run_b = Score(config, res, manifest_b);

    const auto ei_a = run_a.MeanEi();
    const auto ei_b = run_b.MeanEi();
    const auto adj_a = run_a.AdjectiveRates();
    const auto adj_b = run_b.AdjectiveRates();
    const TTestResult ei_test = TwoSampleTTest(ei_a, ei_b, config.ttest);
    const TTestResult adj_test = TwoSampleTTest(adj_a, adj_b, config.ttest);

    auto group = [&](const CorpusRun& run, const fs::path& path,
                     const std::vector<double>& ei, const std::vector<double>& adj) {
      return json{{"name", GroupName(run, path)},
                  {"manifest", path.filename().string()},
                  {"skipped", run.skipped.size()},
                  {"mean_ei", report::ToJson(Summarize(ei))},
                  {"adjective_rate", report::ToJson(Summarize(adj))}};
    };
    json doc = RunHeader(config, res);
    doc["a"] = group(run_a, manifest_a, ei_a, adj_a);
    doc["b"] = group(run_b, manifest_b, ei_b, adj_b);
    doc["tests"] = {{"mean_ei", report::ToJson(ei_test)},
                    {"adjective_rate", report::ToJson(adj_test)}};

    OutputSet outputs;
    outputs.Add("compare.json", doc.dump(2) + "\n");
    outputs.Commit(config.output_dir);

    for (const char* side : {"a", "b"}) {
      const json& g = doc[side];
      fmt::print(out, "{} ({}): n={} mean_ei={:.4f} +- {:.4f} adjective_rate={:.4f} +- {:.4f}\n",
                 g["name"].get<std::string>(), side, g["mean_ei"]["n"].get<std::size_t>(),
                 g["mean_ei"]["mean"].get<double>(), g["mean_ei"]["sd"].get<double>(),
                 g["adjective_rate"]["mean"].get<double>(),
                 g["adjective_rate"]["sd"].get<double>());
    }
    for (const auto& [name, t] : {std::pair{"mean_ei", ei_test}, std::pair{"adjective_rate", adj_test}}) {
      fmt::print(out, "{} {} t={:.6g} df={:.6g} p={:.6g}\n", name,
                 TTestKindName(t.kind), t.t, t.df, t.p_two_sided);
    }
    return static_cast<int>(kExitOk);
  });
}

int CmdClassify(const RunConfig& config, const fs::path& manifest_path,
                std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    const std::vector<ClassifierId> ids = SelectClassifiers(config);
    const Resources res = LoadResources(config);
    const CorpusManifest manifest = LoadManifest(manifest_path);
    const auto labels = manifest.Labels();
    if (labels.size() != 2) {
      throw Error(ErrorKind::kArgument,
                  "classification needs exactly 2 labels, manifest has " +
                      std::to_string(labels.size()));
    }

    ScoringOptions options;
    options.abbreviations = &res.abbreviations;
    options.std_mode = config.std_mode;
    options.threads = config.threads;
    const CorpusRun run = RunCorpus(manifest, res.list, res.adjectives, options);

    std::map<std::string, int, std::less<>> label_of;
    for (const auto& d : run.documents) {
      label_of[d.profile.doc_id] = d.label == labels[0] ? 0 : 1;
    }
    for (int c = 0; c < 2; ++c) {
      const auto n = static_cast<int>(run.MeanEi(labels[c]).size());
      if (n < config.k_folds) {
        throw Error(ErrorKind::kArgument,
                    fmt::format("label '{}' has {} scored documents; {}-fold "
                                "cross-validation needs at least {}",
                                labels[c], n, config.k_folds, config.k_folds));
      }
    }
    const auto profiles = run.Profiles();
    const LabeledDataset ds = FeaturesFromProfiles(
        profiles, label_of, config.feature_mode, {labels[0], labels[1]});

    std::vector<EvalReport> reports;
    for (ClassifierId id : ids) {
      reports.push_back(CrossValidate(id, ds, config.k_folds, config.seed));
    }

    json doc = RunHeader(config, res);
    doc["manifest"] = manifest_path.filename().string();
    doc["seed"] = config.seed;
    doc["k"] = config.k_folds;
    doc["features"] = FeatureModeName(config.feature_mode);
    doc["class_names"] = {labels[0], labels[1]};
    doc["positive_class"] = labels[1];
    doc["subjects"] = ds.size();
    doc["skipped"] = run.skipped.size();
    doc["reports"] = json::array();
    for (const auto& r : reports) doc["reports"].push_back(report::ToJson(r));

    OutputSet outputs;
    outputs.Add("table1.csv", report::Table1Csv(reports));
    outputs.Add("classify.json", doc.dump(2) + "\n");
    outputs.Add("scatter.csv", report::ScatterCsv(run));
    outputs.Commit(config.output_dir);

    fmt::print(out, "{} subjects ({}: {}, {}: {}), {}-fold CV, seed {}, features {}\n",
               ds.size(), labels[0], ds.ClassCount(0), labels[1], ds.ClassCount(1),
               config.k_folds, config.seed, FeatureModeName(config.feature_mode));
    fmt::print(out, "{:<24} {:>9} {:>9} {:>9} {:>9} {:>9} {:>9}\n", "classifier",
               "perf", "std", "auc", "std", "f1", "std");
    for (const auto& r : reports) {
      fmt::print(out, "{:<24} {:>9.4f} {:>9.4f} {:>9.4f} {:>9.4f} {:>9.4f} {:>9.4f}\n",
                 ClassifierDisplayName(ParseClassifierId(r.classifier_id)),
                 r.accuracy.mean, r.accuracy.std, r.roc_auc.mean, r.roc_auc.std,
                 r.f1.mean, r.f1.std);
    }
    return static_cast<int>(kExitOk);
  });
}

int CmdLexiconInfo(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    const Resources res = LoadResources(config);
    std::vector<const DalEntry*> ranked;
    for (const auto& e : res.lexicon.entries()) ranked.push_back(&e);
    std::sort(ranked.begin(), ranked.end(), [](const DalEntry* a, const DalEntry* b) {
      return std::tie(a->pleasantness, a->word) < std::tie(b->pleasantness, b->word);
    });

    constexpr std::size_t kSamples = 10;
    std::vector<std::string> negative;
    std::vector<std::string> positive;
    for (std::size_t i = 0; i < ranked.size() && negative.size() < kSamples; ++i) {
      if (res.list.negative().contains(ranked[i]->word)) negative.push_back(ranked[i]->word);
    }
    for (std::size_t i = ranked.size(); i > 0 && positive.size() < kSamples; --i) {
      if (res.list.positive().contains(ranked[i - 1]->word)) {
        positive.push_back(ranked[i - 1]->word);
      }
    }

    fmt::print(out, "lexicon: {} ({} entries, {} duplicates dropped)\n",
               res.lexicon.source_id(), res.lexicon.size(),
               res.lexicon.duplicates_dropped());
    fmt::print(out, "negative tail: {} words (lower_frac {})\n",
               res.list.negative().size(), config.lower_frac);
    fmt::print(out, "positive tail: {} words (upper_frac {})\n",
               res.list.positive().size(), config.upper_frac);
    fmt::print(out, "negative sample: {}\n", fmt::join(negative, " "));
    fmt::print(out, "positive sample: {}\n", fmt::join(positive, " "));
    return static_cast<int>(kExitOk);
  });
}

int CmdReplicate(const RunConfig& config, const fs::path& intense,
                 const fs::path& neutral, const fs::path& cohort,
                 std::ostream& out, std::ostream& err) {
  auto sub = [&](const char* name) {
    RunConfig c = config;
    c.output_dir = config.output_dir / name;
    return c;
  };
  fmt::print(out, "== score {}\n", intense.string());
  if (int rc = CmdScore(sub("intense"), intense, out, err); rc != kExitOk) return rc;
  fmt::print(out, "== score {}\n", neutral.string());
  if (int rc = CmdScore(sub("neutral"), neutral, out, err); rc != kExitOk) return rc;
  fmt::print(out, "== compare\n");
  if (int rc = CmdCompare(sub("compare"), intense, neutral, out, err); rc != kExitOk) {
    return rc;
  }
  fmt::print(out, "== classify {}\n", cohort.string());
  return CmdClassify(sub("classify"), cohort, out, err);
}

int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Emotion intensity scoring, corpus comparison and subject classification"};
  app.name("affectix");
  app.require_subcommand(1);

  RunConfig config;
  std::string std_mode = "population";
  std::string features = "mean";
  std::string ttest = "welch";
  std::string seed_text;
  std::vector<CLI::Option*> seed_options;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--lexicon", config.lexicon_path, "DAL-format TSV lexicon");
    sub->add_option("--lower-frac", config.lower_frac,
                    "Fraction of lowest-pleasantness words (default 0.2)");
    sub->add_option("--upper-frac", config.upper_frac,
                    "Fraction of highest-pleasantness words (default 0.2)");
    sub->add_option("--std-mode", std_mode, "Per-document std: population|sample")
        ->check(CLI::IsMember({"population", "sample"}));
    sub->add_option("--abbrev", config.abbrev_path, "Abbreviation list override");
    sub->add_option("--adjectives", config.adjectives_path, "Adjective list override");
    sub->add_option("--suffix-rules", config.suffix_rules_path,
                    "Adjective suffix rules override");
    sub->add_option("--out", config.output_dir, "Output directory");
    sub->add_option("--threads", config.threads, "Scoring threads (0 = auto)");
  };
  auto add_eval = [&](CLI::App* sub) {
    sub->add_option("--k", config.k_folds, "Cross-validation folds (default 10)")
        ->check(CLI::Range(2, 1000000));
    seed_options.push_back(sub->add_option("--seed", seed_text, "Fold shuffle seed (default 42)"));
    sub->add_option("--features", features, "Feature set: mean|mean_std")
        ->check(CLI::IsMember({"mean", "mean_std"}));
    sub->add_option("--classifier", config.classifiers,
                    "Classifier id (repeatable): logreg, lda, gnb, knn, dtree");
  };
  auto add_ttest = [&](CLI::App* sub) {
    sub->add_option("--ttest", ttest, "t-test kind: welch|pooled")
        ->check(CLI::IsMember({"welch", "pooled"}));
  };

  fs::path manifest;
  fs::path manifest_b;
  fs::path cohort;

  auto* score = app.add_subcommand("score", "Score a corpus; write profiles and histogram");
  add_common(score);
  score->add_option("manifest", manifest, "Manifest CSV (doc_id,path,label)")->required();

  auto* compare = app.add_subcommand("compare", "Compare two corpora with t-tests");
  add_common(compare);
  add_ttest(compare);
  compare->add_option("manifest_a", manifest, "First manifest")->required();
  compare->add_option("manifest_b", manifest_b, "Second manifest")->required();

  auto* classify = app.add_subcommand("classify", "Cross-validate classifiers on a cohort");
  add_common(classify);
  add_eval(classify);
  classify->add_option("manifest", manifest, "Two-label manifest CSV")->required();

  auto* info = app.add_subcommand("lexicon-info", "Print lexicon and tail sizes");
  add_common(info);

  auto* replicate = app.add_subcommand("replicate", "score -> compare -> classify");
  add_common(replicate);
  add_eval(replicate);
  add_ttest(replicate);
  replicate->add_option("--intense", manifest, "Emotionally intense corpus")->required();
  replicate->add_option("--neutral", manifest_b, "Neutral corpus")->required();
  replicate->add_option("--cohort", cohort, "Two-label subject cohort")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitInput;
  }

  config.std_mode = std_mode == "sample" ? StdMode::kSample : StdMode::kPopulation;
  config.feature_mode =
      features == "mean_std" ? FeatureMode::kMeanAndStd : FeatureMode::kMeanOnly;
  config.ttest = ttest == "pooled" ? TTestKind::kPooled : TTestKind::kWelch;

  const bool seed_given = std::any_of(seed_options.begin(), seed_options.end(),
                                      [](const CLI::Option* o) { return o->count() > 0; });
  if (!seed_given) {
    if (const char* env = std::getenv("AFFECTIX_SEED"); env != nullptr && *env != '\0') {
      seed_text = env;
    }
  }
  if (!seed_text.empty()) {
    const char* first = seed_text.data();
    const char* last = first + seed_text.size();
    auto [ptr, ec] = std::from_chars(first, last, config.seed);
    if (ec != std::errc() || ptr != last) {
      fmt::print(err, "error: invalid seed '{}'\n", seed_text);
      return kExitInput;
    }
  }

  if (score->parsed()) return CmdScore(config, manifest, out, err);
  if (compare->parsed()) return CmdCompare(config, manifest, manifest_b, out, err);
  if (classify->parsed()) return CmdClassify(config, manifest, out, err);
  if (info->parsed()) return CmdLexiconInfo(config, out, err);
  return CmdReplicate(config, manifest, manifest_b, cohort, out, err);
}

}  // namespace affectix::cli
