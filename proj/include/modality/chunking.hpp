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

// Chunk segmentation of tag strings.
//
// conll_chunks() follows ConllEval's chunk boundary rules, extended with the
// S (single) and E (end) prefixes of BIOSE. A tag splits at its first '-'
// into a prefix and a type, so "B-T-priority" has type "T-priority". A bare
// "H" is read as a singleton chunk of type "H". Tags whose prefix is not one
// of B I E S O H are treated as O.
//
// bio_chunks() groups tokens into BIO chunks regardless of type, which is how
// the event-span and joint schemes delimit a chunk whose tokens carry
// different roles.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace modality {

struct TypedChunk {
  std::size_t start = 0;
  std::size_t end = 0;  // inclusive
  std::string type;

  auto operator<=>(const TypedChunk&) const = default;
};

// Prefix and type of a tag in ConllEval's reading.
inline std::pair<char, std::string> split_conll_tag(std::string_view tag) {
  if (tag == "H") return {'S', "H"};
  if (tag.empty()) return {'O', ""};
  const char prefix = tag[0];
  if (prefix != 'B' && prefix != 'I' && prefix != 'E' && prefix != 'S') return {'O', ""};
  if (tag.size() == 1) return {prefix, ""};
  if (tag[1] != '-') return {'O', ""};
  return {prefix, std::string(tag.substr(2))};
}

inline bool conll_chunk_end(char prev, char cur, const std::string& prev_type,
                            const std::string& type) {
  if (prev == 'E' || prev == 'S') return true;
  if ((prev == 'B' || prev == 'I') && (cur == 'B' || cur == 'S' || cur == 'O')) return true;
  return prev != 'O' && prev_type != type;
}

inline bool conll_chunk_start(char prev, char cur, const std::string& prev_type,
                              const std::string& type) {
  if (cur == 'B' || cur == 'S') return true;
  if ((prev == 'E' || prev == 'S' || prev == 'O') && (cur == 'E' || cur == 'I')) return true;
  return cur != 'O' && prev_type != type;
}

inline std::vector<TypedChunk> conll_chunks(std::span<const std::string> tags) {
  std::vector<TypedChunk> out;
  char prev = 'O';
  std::string prev_type;
  bool open = false;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    auto [cur, type] = split_conll_tag(tags[i]);
    if (open && conll_chunk_end(prev, cur, prev_type, type)) {
      out.back().end = i - 1;
      open = false;
    }
    if (conll_chunk_start(prev, cur, prev_type, type)) {
      out.push_back(TypedChunk{i, i, type});
      open = true;
    }
    prev = cur;
    prev_type = std::move(type);
  }
  if (open) out.back().end = tags.size() - 1;
  return out;
}

struct TokenSpanChunk {
  std::size_t start = 0;
  std::size_t end = 0;

  auto operator<=>(const TokenSpanChunk&) const = default;
};

// BIO chunks ignoring types: a chunk opens at B (or S), or at I/E that does
// not continue an open chunk; it closes before O, B or S, and after E or S.
inline std::vector<TokenSpanChunk> bio_chunks(std::span<const std::string> tags) {
  std::vector<TokenSpanChunk> out;
  bool open = false;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    const std::string_view t = tags[i];
    const char prefix = t.empty() ? 'O' : t[0];
    const bool chunk_tag = (prefix == 'B' || prefix == 'I' || prefix == 'E' || prefix == 'S') &&
                           (t.size() == 1 || t[1] == '-');
    if (!chunk_tag) {
      open = false;
      continue;
    }
    if (prefix == 'B' || prefix == 'S' || !open) {
      out.push_back(TokenSpanChunk{i, i});
    } else {
      out.back().end = i;
    }
    open = prefix == 'B' || prefix == 'I';
  }
  return out;
}

}  // namespace modality
