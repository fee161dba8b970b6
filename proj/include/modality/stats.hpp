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

#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <tuple>

#include <json.hpp>

#include "modality/corpus.hpp"

namespace modality {

struct CorpusStats {
  std::size_t n_documents = 0;
  std::size_t n_documents_with_trigger = 0;
  std::size_t n_sentences = 0;
  std::size_t n_sentences_with_trigger = 0;
  std::size_t n_trigger_instances = 0;
  // Distinct (sentence, trigger span) pairs; an instance-level count that
  // merges triggers annotated with several events.
  std::size_t n_distinct_trigger_spans = 0;
  std::size_t n_multiword_triggers = 0;
  // Keyed by the lowercased lemma sequence of the trigger span.
  std::size_t n_unique_trigger_types = 0;
  std::map<FineSense, std::size_t> per_sense;
  // Keyed by the UPOS of the first trigger token.
  std::map<std::string, std::size_t> per_pos;

  bool operator==(const CorpusStats&) const = default;
};

inline std::string trigger_type(const Sentence& s, const Span& trigger) {
  std::string key;
  for (std::size_t i = trigger.start; i <= trigger.end; ++i) {
    if (i != trigger.start) key += ' ';
    key += ascii_lower(s.tokens[i].lemma);
  }
  return key;
}

inline CorpusStats compute_stats(const Corpus& corpus) {
  CorpusStats st;
  for (auto s : kFineSenses) st.per_sense[s] = 0;
  std::set<std::string> docs, docs_with_trigger, types;
  std::set<std::tuple<std::string, std::int64_t, std::size_t, std::size_t>> spans;
  for (const auto& s : corpus) {
    docs.insert(s.doc_id);
    ++st.n_sentences;
    if (!s.instances.empty()) {
      ++st.n_sentences_with_trigger;
      docs_with_trigger.insert(s.doc_id);
    }
    for (const auto& inst : s.instances) {
      ++st.n_trigger_instances;
      ++st.per_sense[inst.sense];
      ++st.per_pos[s.tokens[inst.trigger.start].pos];
      if (inst.trigger.size() > 1) ++st.n_multiword_triggers;
      types.insert(trigger_type(s, inst.trigger));
      spans.emplace(s.doc_id, s.sent_id, inst.trigger.start, inst.trigger.end);
    }
  }
  st.n_documents = docs.size();
  st.n_documents_with_trigger = docs_with_trigger.size();
  st.n_unique_trigger_types = types.size();
  st.n_distinct_trigger_spans = spans.size();
  return st;
}

inline nlohmann::ordered_json to_json(const CorpusStats& st) {
  nlohmann::ordered_json j;
  j["n_documents"] = st.n_documents;
  j["n_documents_with_trigger"] = st.n_documents_with_trigger;
  j["n_sentences"] = st.n_sentences;
  j["n_sentences_with_trigger"] = st.n_sentences_with_trigger;
  j["n_trigger_instances"] = st.n_trigger_instances;
  j["n_distinct_trigger_spans"] = st.n_distinct_trigger_spans;
  j["n_multiword_triggers"] = st.n_multiword_triggers;
  j["n_unique_trigger_types"] = st.n_unique_trigger_types;
  nlohmann::ordered_json senses = nlohmann::ordered_json::object();
  for (const auto& [sense, n] : st.per_sense) senses[std::string(to_string(sense))] = n;
  j["per_sense"] = senses;
  nlohmann::ordered_json conflated = nlohmann::ordered_json::object();
  for (auto c : kConflatedSenses) {
    std::size_t n = 0;
    for (const auto& [sense, k] : st.per_sense) {
      if (conflate(sense) == c) n += k;
    }
    conflated[std::string(to_string(c))] = n;
  }
  j["per_conflated_sense"] = conflated;
  nlohmann::ordered_json coarse = nlohmann::ordered_json::object();
  for (auto c : kCoarseSenses) {
    std::size_t n = 0;
    for (const auto& [sense, k] : st.per_sense) {
      if (coarsen(sense) == c) n += k;
    }
    coarse[std::string(to_string(c))] = n;
  }
  j["per_coarse_sense"] = coarse;
  nlohmann::ordered_json pos = nlohmann::ordered_json::object();
  for (const auto& [tag, n] : st.per_pos) pos[tag] = n;
  j["per_pos"] = pos;
  return j;
}

}  // namespace modality
