// Copyright 2026 The Modality Toolkit Authors.
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

// Experiment pipelines: the majority-vote baseline over every fold of a split
// manifest, and aggregation of per-fold metrics into mean/std tables.
//
// A fold record is
//   {"fold": k, "rows": {<granularity>: {"labeled": M, "unlabeled": M}}}
// with M the metrics JSON of eval.hpp. A report is
//   {"folds": n, "rows": {<granularity>: {<mode>: {<field>: {"mean", "std"}},
//                                         "per_label": {<mode>: {<label>: ...}}}}}

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "modality/baseline.hpp"
#include "modality/corpus.hpp"
#include "modality/eval.hpp"
#include "modality/schemes.hpp"
#include "modality/splits.hpp"

namespace modality {

inline const std::vector<Granularity>& table_granularities() {
  static const std::vector<Granularity> kRows = {Granularity::Binary, Granularity::Coarse,
                                                 Granularity::FineConflated};
  return kRows;
}

struct BaselineOptions {
  LexiconKey key = LexiconKey::Form;
  std::vector<Granularity> granularities = table_granularities();
};

struct EvalPair {
  ChunkMetrics labeled;
  ChunkMetrics unlabeled;
};

inline EvalPair score_both(std::span<const TagSequence> gold, std::span<const TagSequence> pred) {
  return {score(gold, pred, EvalMode::Labeled), score(gold, pred, EvalMode::Unlabeled)};
}

// Trains on the fold's training sentences and scores trigger tagging on the
// test sentences, once per granularity.
inline nlohmann::ordered_json baseline_fold(const Corpus& corpus, const FoldSplit& split,
                                            std::size_t fold, const BaselineOptions& opt) {
  nlohmann::ordered_json record;
  record["fold"] = fold;
  nlohmann::ordered_json rows = nlohmann::ordered_json::object();
  for (auto g : opt.granularities) {
    const Scheme scheme{SchemeKind::TriggerBiose, g, true};
    const MajorityLexicon lex = train_majority(corpus, split.train, scheme, opt.key);
    std::vector<TagSequence> gold, pred;
    gold.reserve(split.test.size());
    pred.reserve(split.test.size());
    for (auto i : split.test) {
      gold.push_back(encode_primary(corpus[i], scheme));
      pred.push_back(tag_majority(lex, corpus[i]));
    }
    auto both = score_both(gold, pred);
    rows[std::string(to_string(g))] = {{"labeled", to_json(both.labeled)},
                                       {"unlabeled", to_json(both.unlabeled)}};
  }
  record["rows"] = rows;
  return record;
}

namespace pipeline_detail {

struct Accumulator {
  std::vector<double> values;

  nlohmann::ordered_json summary() const {
    double mean = 0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double var = 0;
    for (double v : values) var += (v - mean) * (v - mean);
    const double sd = values.size() > 1 ? std::sqrt(var / static_cast<double>(values.size() - 1))
                                        : 0.0;
    return {{"mean", mean}, {"std", sd}, {"n", values.size()}};
  }
};

inline constexpr std::array<const char*, 5> kFields = {"precision", "recall", "f1", "micro_f1",
                                                       "macro_f1"};

}  // namespace pipeline_detail

// Mean and sample standard deviation over folds of every score in the fold
// records. Per-label entries average over the folds in which the label occurs.
inline nlohmann::ordered_json aggregate_folds(const std::vector<nlohmann::ordered_json>& records) {
  using pipeline_detail::Accumulator;
  if (records.empty()) throw InputError("no fold records to aggregate");
  // granularity -> mode -> field
  std::map<std::string, std::map<std::string, std::map<std::string, Accumulator>>> overall;
  // granularity -> mode -> label -> field
  std::map<std::string,
           std::map<std::string, std::map<std::string, std::map<std::string, Accumulator>>>>
      labels;
  std::vector<std::string> row_order;
  for (const auto& rec : records) {
    if (!rec.contains("rows") || !rec["rows"].is_object()) {
      throw InputError("fold record without 'rows'");
    }
    for (const auto& [gran, modes] : rec["rows"].items()) {
      if (std::find(row_order.begin(), row_order.end(), gran) == row_order.end()) {
        row_order.push_back(gran);
      }
      for (const auto& [mode, m] : modes.items()) {
        for (const char* f : pipeline_detail::kFields) {
          if (!m.contains(f)) throw InputError("metrics without '" + std::string(f) + "'");
          overall[gran][mode][f].values.push_back(m[f].get<double>());
        }
        if (!m.contains("per_label")) continue;
        for (const auto& [label, s] : m["per_label"].items()) {
          for (const char* f : {"precision", "recall", "f1"}) {
            labels[gran][mode][label][f].values.push_back(s[f].get<double>());
          }
        }
      }
    }
  }
  nlohmann::ordered_json report;
  report["folds"] = records.size();
  nlohmann::ordered_json rows = nlohmann::ordered_json::object();
  for (const auto& gran : row_order) {
    nlohmann::ordered_json row;
    for (const auto& [mode, fields] : overall[gran]) {
      for (const auto& [f, acc] : fields) row[mode][f] = acc.summary();
    }
    nlohmann::ordered_json per_label = nlohmann::ordered_json::object();
    for (const auto& [mode, by_label] : labels[gran]) {
      for (const auto& [label, fields] : by_label) {
        for (const auto& [f, acc] : fields) per_label[mode][label][f] = acc.summary();
      }
    }
    row["per_label"] = per_label;
    rows[gran] = row;
  }
  report["rows"] = rows;
  return report;
}

// Runs the baseline on every fold of the manifest and aggregates.
inline nlohmann::ordered_json run_baseline(const Corpus& corpus, const SplitManifest& manifest,
                                           const BaselineOptions& opt = {}) {
  std::vector<nlohmann::ordered_json> records;
  for (std::size_t k = 0; k < manifest.folds.size(); ++k) {
    records.push_back(baseline_fold(corpus, apply_manifest(corpus, manifest, k), k, opt));
  }
  nlohmann::ordered_json out;
  out["scheme"] = "trigger_biose";
  out["key"] = std::string(to_string(opt.key));
  out["seed"] = manifest.seed;
  out["fold_records"] = records;
  out["report"] = aggregate_folds(records);
  return out;
}

// Table with one row per granularity: labeled and unlabeled P/R/F1 (fold
// means) followed by the labeled per-label F1.
inline std::string format_table(const nlohmann::ordered_json& report) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << "folds: " << report.value("folds", 0) << "\n";
  out << std::left << std::setw(12) << "granularity" << std::right;
  for (const char* mode : {"labeled", "unlabeled"}) {
    for (const char* f : {"P", "R", "F1"}) {
      out << std::setw(11) << (std::string(mode == std::string("labeled") ? "L-" : "U-") + f);
    }
  }
  out << "  per-label F1 (labeled)\n";
  for (const auto& [gran, row] : report["rows"].items()) {
    out << std::left << std::setw(12) << gran << std::right;
    for (const char* mode : {"labeled", "unlabeled"}) {
      for (const char* f : {"precision", "recall", "f1"}) {
        if (row.contains(mode)) {
          out << std::setw(11) << row[mode][f]["mean"].get<double>();
        } else {
          out << std::setw(11) << "NA";
        }
      }
    }
    out << " ";
    if (row.contains("per_label") && row["per_label"].contains("labeled")) {
      for (const auto& [label, s] : row["per_label"]["labeled"].items()) {
        out << "  " << label << " " << s["f1"]["mean"].get<double>();
      }
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace modality
