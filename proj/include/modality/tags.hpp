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

// Tag string grammar.
//
//   tag      := "O" | "H" | trigger | event | joint
//   trigger  := ("B" | "I" | "E" | "S") [ "-" label ]     bare at binary level
//   event    := ("B" | "I") "-E"
//   joint    := ("B" | "I") "-T" [ "-" label ]
//   label    := canonical sense label (see taxonomy.hpp)

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "modality/taxonomy.hpp"

namespace modality {

enum class TagRole : char {
  Outside = 'O',
  Trigger = 'S',  // sense-bearing BIOSE tag
  JointTrigger = 'T',
  Event = 'E',
  Head = 'H',
};

struct Tag {
  char prefix = 'O';  // one of O B I E S H
  TagRole role = TagRole::Outside;
  std::string label;  // sense label; empty when absent

  bool is_outside() const { return prefix == 'O'; }
  bool operator==(const Tag&) const = default;
};

inline bool is_chunk_prefix(char c) {
  return c == 'B' || c == 'I' || c == 'E' || c == 'S';
}

// Parses a tag string; nullopt when it does not follow the grammar. Labels are
// not checked against the taxonomy here.
inline std::optional<Tag> parse_tag(std::string_view s) {
  if (s == "O") return Tag{};
  if (s == "H") return Tag{'H', TagRole::Head, {}};
  if (s.empty() || !is_chunk_prefix(s[0])) return std::nullopt;
  const char prefix = s[0];
  if (s.size() == 1) return Tag{prefix, TagRole::Trigger, {}};
  if (s[1] != '-' || s.size() == 2) return std::nullopt;
  std::string_view rest = s.substr(2);
  if (rest == "E") {
    if (prefix != 'B' && prefix != 'I') return std::nullopt;
    return Tag{prefix, TagRole::Event, {}};
  }
  if (rest == "T" || rest.starts_with("T-")) {
    if (prefix != 'B' && prefix != 'I') return std::nullopt;
    std::string label = rest.size() > 2 ? std::string(rest.substr(2)) : std::string();
    if (rest.size() == 2) return std::nullopt;  // "T-" with empty label
    return Tag{prefix, TagRole::JointTrigger, std::move(label)};
  }
  if (rest.find('-') != std::string_view::npos) return std::nullopt;
  return Tag{prefix, TagRole::Trigger, std::string(rest)};
}

inline std::string format_tag(const Tag& t) {
  switch (t.role) {
    case TagRole::Outside: return "O";
    case TagRole::Head: return "H";
    case TagRole::Event: return std::string(1, t.prefix) + "-E";
    case TagRole::JointTrigger:
      return std::string(1, t.prefix) + "-T" + (t.label.empty() ? "" : "-" + t.label);
    case TagRole::Trigger:
      return t.label.empty() ? std::string(1, t.prefix)
                             : std::string(1, t.prefix) + "-" + t.label;
  }
  return "O";
}

// Rewrites the sense suffix of a tag to granularity g. Tags without a sense
// (O, H, event tags, unlabeled T) are fixed points. Throws
// std::invalid_argument for unparseable tags or impossible refinements.
inline std::string project(std::string_view tag, Granularity g) {
  auto parsed = parse_tag(tag);
  if (!parsed) throw std::invalid_argument("malformed tag '" + std::string(tag) + "'");
  Tag t = std::move(*parsed);
  if (t.role == TagRole::Trigger) {
    if (t.label.empty()) {
      if (g != Granularity::Binary) {
        throw std::invalid_argument("cannot refine binary tag '" + std::string(tag) + "'");
      }
      return format_tag(t);
    }
    t.label = project_label(t.label, g);
  } else if (t.role == TagRole::JointTrigger && !t.label.empty()) {
    t.label = project_label(t.label, g);
  }
  return format_tag(t);
}

}  // namespace modality
