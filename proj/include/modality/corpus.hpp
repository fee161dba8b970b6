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

// In-memory corpus model: tokens with their dependency parse, and the modal
// instances (trigger, sense, event span, event head) annotated on sentences.

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "modality/error.hpp"
#include "modality/taxonomy.hpp"

namespace modality {

// Inclusive token range [start, end].
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - start + 1; }
  bool contains(std::size_t i) const { return start <= i && i <= end; }
  bool contains(const Span& o) const { return start <= o.start && o.end <= end; }
  bool overlaps(const Span& o) const { return start <= o.end && o.start <= end; }

  auto operator<=>(const Span&) const = default;
};

struct Token {
  std::size_t index = 0;
  std::string form;
  std::string lemma;
  std::string pos;
  std::optional<std::size_t> dep_head;  // nullopt for the root
  std::string dep_rel;

  bool operator==(const Token&) const = default;
};

struct ModalInstance {
  Span trigger;
  FineSense sense = FineSense::RulesNorms;
  std::optional<Span> event;
  std::optional<std::size_t> event_head;

  auto operator<=>(const ModalInstance&) const = default;
};

using SentenceId = std::pair<std::string, std::int64_t>;

struct Sentence {
  std::string doc_id;
  std::int64_t sent_id = 0;
  std::vector<Token> tokens;
  std::vector<ModalInstance> instances;

  SentenceId id() const { return {doc_id, sent_id}; }
  std::size_t size() const { return tokens.size(); }
  bool operator==(const Sentence&) const = default;
};

using Corpus = std::vector<Sentence>;

// Checks every structural invariant of a sentence: contiguous token indices,
// an acyclic dependency forest, and annotation spans within bounds. Throws
// InputError describing the first violation.
inline void validate(const Sentence& s) {
  const std::size_t n = s.tokens.size();
  const std::string where = s.doc_id + "#" + std::to_string(s.sent_id);
  for (std::size_t i = 0; i < n; ++i) {
    const Token& t = s.tokens[i];
    if (t.index != i) {
      throw InputError(where + ": token index " + std::to_string(t.index) +
                       " at position " + std::to_string(i));
    }
    if (t.dep_head) {
      if (*t.dep_head >= n) {
        throw InputError(where + ": dependency head out of range at token " +
                         std::to_string(i));
      }
      if (*t.dep_head == i) {
        throw InputError(where + ": token " + std::to_string(i) + " heads itself");
      }
    }
  }
  // Every head chain must reach a root within n steps.
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<std::size_t> cur = i;
    std::size_t steps = 0;
    while (cur && s.tokens[*cur].dep_head) {
      cur = s.tokens[*cur].dep_head;
      if (++steps > n) {
        throw InputError(where + ": dependency cycle through token " + std::to_string(i));
      }
    }
  }
  for (const auto& inst : s.instances) {
    if (inst.trigger.start > inst.trigger.end || inst.trigger.end >= n) {
      throw InputError(where + ": trigger span out of range");
    }
    if (inst.event && (inst.event->start > inst.event->end || inst.event->end >= n)) {
      throw InputError(where + ": event span out of range");
    }
    if (inst.event_head) {
      if (*inst.event_head >= n) throw InputError(where + ": event head out of range");
      if (inst.event && !inst.event->contains(*inst.event_head)) {
        throw InputError(where + ": event head outside its event span");
      }
    }
  }
}

// Topmost token of `span` in the dependency tree: the leftmost token whose
// parent lies outside the span or which is a root. Total on valid input,
// since the topmost token of any subtree cut by the span qualifies.
inline std::size_t extract_event_head(const Sentence& s, Span span) {
  for (std::size_t i = span.start; i <= span.end; ++i) {
    const auto& head = s.tokens[i].dep_head;
    if (!head || !span.contains(*head)) return i;
  }
  // Unreachable for acyclic parses; fall back to the span start.
  return span.start;
}

// Coarse part-of-speech class of a UPOS (or PTB) tag, used to bucket triggers.
inline std::string coarse_pos(std::string_view pos) {
  if (pos == "VERB" || pos == "AUX" || pos == "MD" || pos.starts_with("VB")) return "Verb";
  if (pos == "NOUN" || pos == "PROPN" || pos.starts_with("NN")) return "Noun";
  if (pos == "ADJ" || pos.starts_with("JJ")) return "Adjective";
  if (pos == "ADV" || pos.starts_with("RB") || pos == "WRB") return "Adverb";
  if (pos == "PART" || pos == "RP" || pos == "TO") return "Particle";
  return "Other";
}

inline std::string ascii_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c);
  });
  return out;
}

}  // namespace modality
