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

// JSON and CSV renderings of corpus runs and evaluation reports.
//
// profiles.csv   doc_id,label,n_sentences,mean_ei,std_ei,adjective_rate
// histogram.csv  bin,bin_start,bin_end,<one count column per label>
// scatter.csv    doc_id,label,mean_ei,std_ei
// table1.csv     classifier,perf_mean,perf_std,auc_mean,auc_std,f1_mean,f1_std
//
// EvalReport JSON:
//   {"classifier": "logreg", "name": "LogisticRegression", "k": 10,
//    "seed": 42,
//    "accuracy": {"mean": m, "std": s}, "roc_auc": {...}, "f1": {...},
//    "auc_excluded_folds": 0,
//    "per_fold": [{"fold": 0, "accuracy": a, "roc_auc": r|null, "f1": f}]}

#ifndef AFFECTIX_REPORT_HPP_
#define AFFECTIX_REPORT_HPP_

#include <span>
#include <string>

#include <json.hpp>

#include "affectix/classify.hpp"
#include "affectix/corpus.hpp"
#include "affectix/stats.hpp"

namespace affectix::report {

inline constexpr int kHistogramBins = 30;

std::string FormatDouble(double value);

nlohmann::json ToJson(const SampleSummary& summary);
nlohmann::json ToJson(const TTestResult& result);
nlohmann::json ToJson(const EvalReport& report);
nlohmann::json ToJson(const CorpusRun& run);

std::string ProfilesCsv(const CorpusRun& run);
// Equal-width bins over [0, max mean_ei]; the last bin is closed.
std::string HistogramCsv(const CorpusRun& run, int bins = kHistogramBins);
std::string ScatterCsv(const CorpusRun& run);

std::string Table1Csv(std::span<const EvalReport> reports);

}  // namespace affectix::report

#endif  // AFFECTIX_REPORT_HPP_
