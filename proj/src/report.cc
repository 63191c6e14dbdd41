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

#include "affectix/report.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <fmt/format.h>

#include "affectix/csv.hpp"

namespace affectix::report {
namespace {

using nlohmann::json;

json Metric(const MetricSummary& m) { return {{"mean", m.mean}, {"std", m.std}}; }

}  // namespace

std::string FormatDouble(double value) { return fmt::format("{:.10g}", value); }

json ToJson(const SampleSummary& summary) {
  return {{"n", summary.n}, {"mean", summary.mean}, {"sd", summary.sd}};
}

json ToJson(const TTestResult& result) {
  json j = {{"kind", TTestKindName(result.kind)},
            {"df", result.df},
            {"p_two_sided", result.p_two_sided}};
  // JSON has no infinities.
  j["t"] = std::isfinite(result.t) ? json(result.t) : json(result.t > 0 ? "inf" : "-inf");
  return j;
}

json ToJson(const EvalReport& report) {
  json folds = json::array();
  for (std::size_t i = 0; i < report.per_fold.size(); ++i) {
    const auto& f = report.per_fold[i];
    folds.push_back({{"fold", i},
                     {"accuracy", f.accuracy},
                     {"roc_auc", f.roc_auc ? json(*f.roc_auc) : json(nullptr)},
                     {"f1", f.f1}});
  }
  const ClassifierId id = ParseClassifierId(report.classifier_id);
  return {{"classifier", report.classifier_id},
          {"name", ClassifierDisplayName(id)},
          {"k", report.k},
          {"seed", report.seed},
          {"accuracy", Metric(report.accuracy)},
          {"roc_auc", Metric(report.roc_auc)},
          {"f1", Metric(report.f1)},
          {"auc_excluded_folds", report.auc_excluded_folds},
          {"per_fold", folds}};
}

json ToJson(const CorpusRun& run) {
  json docs = json::array();
  for (const auto& d : run.documents) {
    json series = json::array();
    for (const auto& s : d.profile.series) {
      series.push_back({{"n_words", s.n_words},
                        {"n_emotional", s.n_emotional},
                        {"ei", s.ei}});
    }
    docs.push_back({{"doc_id", d.profile.doc_id},
                    {"label", d.label},
                    {"n_sentences", d.profile.series.size()},
                    {"n_tokens", d.n_tokens},
                    {"mean_ei", d.profile.mean_ei},
                    {"std_ei", d.profile.std_ei},
                    {"std_mode", StdModeName(d.profile.std_mode)},
                    {"adjective_rate", d.adjective_rate},
                    {"series", series}});
  }
  json skipped = json::array();
  for (const auto& s : run.skipped) {
    skipped.push_back({{"doc_id", s.doc_id}, {"label", s.label}, {"reason", s.reason}});
  }
  json groups = json::object();
  for (const auto& [label, summary] : run.group_summaries) {
    groups[label] = {{"mean_ei", ToJson(summary)},
                     {"adjective_rate", ToJson(run.adjective_summaries.at(label))}};
  }
  return {{"documents", docs}, {"skipped", skipped}, {"groups", groups}};
}

std::string ProfilesCsv(const CorpusRun& run) {
  std::string out = "doc_id,label,n_sentences,mean_ei,std_ei,adjective_rate\r\n";
  for (const auto& d : run.documents) {
    const std::vector<std::string> fields = {
        d.profile.doc_id, d.label, std::to_string(d.profile.series.size()),
        FormatDouble(d.profile.mean_ei), FormatDouble(d.profile.std_ei),
        FormatDouble(d.adjective_rate)};
    out += csv::FormatRecord(fields);
  }
  return out;
}

std::string HistogramCsv(const CorpusRun& run, int bins) {
  double max = 0.0;
  for (const auto& d : run.documents) max = std::max(max, d.profile.mean_ei);
  const double width = max / bins;

  std::vector<std::string> labels;
  for (const auto& [label, _] : run.group_summaries) labels.push_back(label);
  std::vector<std::vector<int>> counts(labels.size(), std::vector<int>(bins, 0));
  for (const auto& d : run.documents) {
    int bin = width > 0.0 ? static_cast<int>(std::floor(d.profile.mean_ei / width)) : 0;
    bin = std::clamp(bin, 0, bins - 1);
    const auto col = std::find(labels.begin(), labels.end(), d.label) - labels.begin();
    ++counts[static_cast<std::size_t>(col)][static_cast<std::size_t>(bin)];
  }

  std::vector<std::string> header = {"bin", "bin_start", "bin_end"};
  header.insert(header.end(), labels.begin(), labels.end());
  std::string out = csv::FormatRecord(header);
  for (int b = 0; b < bins; ++b) {
    std::vector<std::string> row = {std::to_string(b), FormatDouble(b * width),
                                    FormatDouble(b + 1 == bins ? max : (b + 1) * width)};
    for (const auto& c : counts) row.push_back(std::to_string(c[static_cast<std::size_t>(b)]));
    out += csv::FormatRecord(row);
  }
  return out;
}

std::string ScatterCsv(const CorpusRun& run) {
  std::string out = "doc_id,label,mean_ei,std_ei\r\n";
  for (const auto& d : run.documents) {
    const std::vector<std::string> fields = {d.profile.doc_id, d.label,
                                             FormatDouble(d.profile.mean_ei),
                                             FormatDouble(d.profile.std_ei)};
    out += csv::FormatRecord(fields);
  }
  return out;
}

std::string Table1Csv(std::span<const EvalReport> reports) {
  std::string out = "classifier,perf_mean,perf_std,auc_mean,auc_std,f1_mean,f1_std\r\n";
  for (const auto& r : reports) {
    const std::vector<std::string> fields = {
        std::string(ClassifierDisplayName(ParseClassifierId(r.classifier_id))),
        fmt::format("{:.4f}", r.accuracy.mean), fmt::format("{:.4f}", r.accuracy.std),
        fmt::format("{:.4f}", r.roc_auc.mean), fmt::format("{:.4f}", r.roc_auc.std),
        fmt::format("{:.4f}", r.f1.mean), fmt::format("{:.4f}", r.f1.std)};
    out += csv::FormatRecord(fields);
  }
  return out;
}

}  // namespace affectix::report
