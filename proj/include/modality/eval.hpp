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

// Chunk-level evaluation with ConllEval chunking semantics.
//
// A predicted chunk is correct when a gold chunk has the same boundaries,
// label and role. Unlabeled mode first renames every trigger label to MODAL.
// The overall scores are micro-averaged over chunks (ConllEval's "overall");
// macro F1 is the unweighted mean of the per-label F1 scores.

#pragma once

#include <cmath>
#include <cstddef>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "modality/chunking.hpp"
#include "modality/corpus.hpp"
#include "modality/error.hpp"
#include "modality/schemes.hpp"

namespace modality {

enum class ChunkRole { Trigger, Event, Head };

inline constexpr std::string_view kModalLabel = "MODAL";

struct Chunk {
  std::size_t sentence = 0;
  std::size_t start = 0;
  std::size_t end = 0;
  std::string label;
  ChunkRole role = ChunkRole::Trigger;

  auto operator<=>(const Chunk&) const = default;
};

enum class EvalMode { Labeled, Unlabeled };

inline std::string_view to_string(EvalMode m) {
  return m == EvalMode::Labeled ? "labeled" : "unlabeled";
}

inline std::optional<EvalMode> parse_eval_mode(std::string_view s) {
  if (s == "labeled") return EvalMode::Labeled;
  if (s == "unlabeled") return EvalMode::Unlabeled;
  return std::nullopt;
}

inline std::vector<Chunk> extract_chunks(std::span<const std::string> tags,
                                         std::size_t sentence = 0) {
  std::vector<Chunk> out;
  for (auto& c : conll_chunks(tags)) {
    Chunk chunk{sentence, c.start, c.end, c.type, ChunkRole::Trigger};
    if (c.type == "H") {
      chunk.role = ChunkRole::Head;
    } else if (c.type == "E") {
      chunk.role = ChunkRole::Event;
    } else if (c.type.starts_with("T-")) {
      chunk.label = c.type.substr(2);
    } else if (c.type.empty()) {
      chunk.label = kModalLabel;
    }
    out.push_back(std::move(chunk));
  }
  return out;
}

inline std::vector<Chunk> extract_chunks(const TagSequence& seq, std::size_t sentence = 0) {
  return extract_chunks(std::span<const std::string>(seq.tags), sentence);
}

struct LabelScores {
  std::size_t gold = 0;
  std::size_t predicted = 0;
  std::size_t correct = 0;

  double precision() const { return predicted ? static_cast<double>(correct) / predicted : 0.0; }
  double recall() const { return gold ? static_cast<double>(correct) / gold : 0.0; }
  double f1() const {
    const double p = precision(), r = recall();
    return p + r > 0 ? 2 * p * r / (p + r) : 0.0;
  }

  LabelScores& operator+=(const LabelScores& o) {
    gold += o.gold;
    predicted += o.predicted;
    correct += o.correct;
    return *this;
  }
  bool operator==(const LabelScores&) const = default;
};

// Scores are fractions in [0, 1]; reports multiply by 100.
struct ChunkMetrics {
  EvalMode mode = EvalMode::Labeled;
  LabelScores overall;
  std::map<std::string, LabelScores> per_label;
  std::size_t tokens = 0;

  double precision() const { return overall.precision(); }
  double recall() const { return overall.recall(); }
  double f1() const { return overall.f1(); }
  double micro_f1() const { return overall.f1(); }
  double macro_f1() const {
    if (per_label.empty()) return 0.0;
    double sum = 0;
    for (const auto& [label, s] : per_label) sum += s.f1();
    return sum / static_cast<double>(per_label.size());
  }
};

namespace eval_detail {

inline void unlabel(std::vector<Chunk>& chunks) {
  for (auto& c : chunks) {
    if (c.role == ChunkRole::Trigger) c.label = kModalLabel;
  }
}

inline void check_shapes(std::span<const TagSequence> gold, std::span<const TagSequence> pred) {
  if (gold.size() != pred.size()) {
    throw InputError("gold has " + std::to_string(gold.size()) + " sentences, predictions " +
                     std::to_string(pred.size()));
  }
  for (std::size_t k = 0; k < gold.size(); ++k) {
    if (gold[k].tags.size() != pred[k].tags.size()) {
      throw InputError("sentence " + std::to_string(k) + ": gold has " +
                       std::to_string(gold[k].tags.size()) + " tags, prediction " +
                       std::to_string(pred[k].tags.size()));
    }
  }
}

// Calls fn(chunk, is_gold, is_correct) for every gold and predicted chunk.
template <typename Fn>
void for_each_chunk(std::span<const TagSequence> gold, std::span<const TagSequence> pred,
                    EvalMode mode, Fn&& fn) {
  check_shapes(gold, pred);
  for (std::size_t k = 0; k < gold.size(); ++k) {
    auto g = extract_chunks(gold[k], k);
    auto p = extract_chunks(pred[k], k);
    if (mode == EvalMode::Unlabeled) {
      unlabel(g);
      unlabel(p);
    }
    const std::set<Chunk> gold_set(g.begin(), g.end());
    const std::set<Chunk> pred_set(p.begin(), p.end());
    for (const auto& c : gold_set) fn(c, true, pred_set.contains(c));
    for (const auto& c : pred_set) fn(c, false, gold_set.contains(c));
  }
}

}  // namespace eval_detail

inline ChunkMetrics score(std::span<const TagSequence> gold, std::span<const TagSequence> pred,
                          EvalMode mode) {
  ChunkMetrics m;
  m.mode = mode;
  eval_detail::for_each_chunk(gold, pred, mode, [&](const Chunk& c, bool is_gold, bool correct) {
    auto& label = m.per_label[c.label];
    if (is_gold) {
      ++m.overall.gold;
      ++label.gold;
      if (correct) {
        ++m.overall.correct;
        ++label.correct;
      }
    } else {
      ++m.overall.predicted;
      ++label.predicted;
    }
  });
  for (const auto& g : gold) m.tokens += g.tags.size();
  return m;
}

// Labeled F1 per coarse POS class of the first token of each trigger chunk.
// `sentences` runs parallel to the tag sequences.
inline std::map<std::string, LabelScores> breakdown_by_pos(std::span<const TagSequence> gold,
                                                           std::span<const TagSequence> pred,
                                                           std::span<const Sentence> sentences) {
  if (sentences.size() != gold.size()) {
    throw InputError("breakdown_by_pos: sentence count does not match tag sequences");
  }
  std::map<std::string, LabelScores> out;
  eval_detail::for_each_chunk(gold, pred, EvalMode::Labeled,
                              [&](const Chunk& c, bool is_gold, bool correct) {
    if (c.role != ChunkRole::Trigger) return;
    auto& s = out[coarse_pos(sentences[c.sentence].tokens.at(c.start).pos)];
    if (is_gold) {
      ++s.gold;
      if (correct) ++s.correct;
    } else {
      ++s.predicted;
    }
  });
  return out;
}

// Fraction of positions where the labels agree.
template <typename T>
double sentence_sense_accuracy(std::span<const T> gold, std::span<const T> pred) {
  if (gold.size() != pred.size()) {
    throw InputError("sentence_sense_accuracy: " + std::to_string(gold.size()) + " gold labels, " +
                     std::to_string(pred.size()) + " predictions");
  }
  if (gold.empty()) return 0.0;
  std::size_t same = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) same += gold[i] == pred[i];
  return static_cast<double>(same) / static_cast<double>(gold.size());
}

inline nlohmann::ordered_json to_json(const LabelScores& s) {
  nlohmann::ordered_json j;
  j["precision"] = 100 * s.precision();
  j["recall"] = 100 * s.recall();
  j["f1"] = 100 * s.f1();
  j["gold"] = s.gold;
  j["predicted"] = s.predicted;
  j["correct"] = s.correct;
  return j;
}

inline nlohmann::ordered_json to_json(const ChunkMetrics& m) {
  nlohmann::ordered_json j;
  j["mode"] = std::string(to_string(m.mode));
  j["precision"] = 100 * m.precision();
  j["recall"] = 100 * m.recall();
  j["f1"] = 100 * m.f1();
  j["micro_f1"] = 100 * m.micro_f1();
  j["macro_f1"] = 100 * m.macro_f1();
  j["tokens"] = m.tokens;
  j["gold"] = m.overall.gold;
  j["predicted"] = m.overall.predicted;
  j["correct"] = m.overall.correct;
  nlohmann::ordered_json labels = nlohmann::ordered_json::object();
  for (const auto& [label, s] : m.per_label) labels[label] = to_json(s);
  j["per_label"] = labels;
  return j;
}

// Plain-text report in ConllEval's layout.
inline std::string format_report(const ChunkMetrics& m) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << "processed " << m.tokens << " tokens with " << m.overall.gold << " phrases; found: "
      << m.overall.predicted << " phrases; correct: " << m.overall.correct << ".\n";
  out << "mode: " << to_string(m.mode) << "; precision: " << std::setw(6)
      << 100 * m.precision() << "%; recall: " << std::setw(6) << 100 * m.recall()
      << "%; FB1: " << std::setw(6) << 100 * m.f1() << "; macro FB1: " << std::setw(6)
      << 100 * m.macro_f1() << '\n';
  for (const auto& [label, s] : m.per_label) {
    out << std::setw(17) << label << ": precision: " << std::setw(6) << 100 * s.precision()
        << "%; recall: " << std::setw(6) << 100 * s.recall() << "%; FB1: " << std::setw(6)
        << 100 * s.f1() << "  " << s.predicted << '\n';
  }
  return out.str();
}

}  // namespace modality
