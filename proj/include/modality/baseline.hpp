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

// Majority-vote tagger: every token gets the tag it carried most often in
// training, keyed by its lowercased form (or lemma). Ties prefer O, then the
// lexicographically smallest tag; unseen keys get O.

#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "modality/conll.hpp"
#include "modality/corpus.hpp"
#include "modality/error.hpp"
#include "modality/schemes.hpp"

namespace modality {

enum class LexiconKey { Form, Lemma };

inline std::string_view to_string(LexiconKey k) { return k == LexiconKey::Form ? "form" : "lemma"; }

class MajorityLexicon {
 public:
  MajorityLexicon() = default;
  MajorityLexicon(Scheme scheme, LexiconKey key) : scheme_(scheme), key_(key) {}

  const Scheme& scheme() const { return scheme_; }
  LexiconKey key_mode() const { return key_; }
  std::size_t size() const { return counts_.size(); }
  const std::map<std::string, std::map<std::string, std::size_t>>& counts() const {
    return counts_;
  }

  std::string key_of(const Token& t) const {
    return ascii_lower(key_ == LexiconKey::Form ? t.form : t.lemma);
  }

  void add(const std::string& key, const std::string& tag, std::size_t count = 1) {
    counts_[key][tag] += count;
  }

  std::string lookup(const std::string& key) const {
    auto it = counts_.find(key);
    if (it == counts_.end()) return "O";
    const std::string* best = nullptr;
    std::size_t best_count = 0;
    // std::map iterates tags in lexicographic order, so the first strict
    // maximum is the smallest tag among the tied ones.
    for (const auto& [tag, n] : it->second) {
      if (!best || n > best_count) {
        best = &tag;
        best_count = n;
      }
    }
    auto o = it->second.find("O");
    if (o != it->second.end() && o->second == best_count) return "O";
    return *best;
  }

  bool operator==(const MajorityLexicon&) const = default;

 private:
  Scheme scheme_;
  LexiconKey key_ = LexiconKey::Form;
  std::map<std::string, std::map<std::string, std::size_t>> counts_;
};

// Counts every token occurrence of (key, tag) over parallel sentence/tag lists.
// All tag sequences must share one scheme.
inline MajorityLexicon train_majority(std::span<const Sentence> sentences,
                                      std::span<const TagSequence> tags,
                                      LexiconKey key = LexiconKey::Form) {
  if (sentences.size() != tags.size()) {
    throw InputError("train_majority: " + std::to_string(sentences.size()) + " sentences but " +
                     std::to_string(tags.size()) + " tag sequences");
  }
  MajorityLexicon lex(tags.empty() ? Scheme{} : tags.front().scheme, key);
  for (std::size_t k = 0; k < sentences.size(); ++k) {
    if (!(tags[k].scheme == lex.scheme())) {
      throw InputError("train_majority: mixed schemes " + to_string(lex.scheme()) + " and " +
                       to_string(tags[k].scheme));
    }
    if (tags[k].tags.size() != sentences[k].tokens.size()) {
      throw InputError("train_majority: tag sequence length mismatch");
    }
    for (std::size_t i = 0; i < sentences[k].tokens.size(); ++i) {
      lex.add(lex.key_of(sentences[k].tokens[i]), tags[k].tags[i]);
    }
  }
  return lex;
}

// Encodes the selected sentences under `scheme` and trains on them.
inline MajorityLexicon train_majority(const Corpus& corpus, std::span<const std::size_t> indices,
                                      const Scheme& scheme, LexiconKey key = LexiconKey::Form) {
  MajorityLexicon lex(scheme, key);
  for (auto i : indices) {
    const Sentence& s = corpus.at(i);
    const TagSequence seq = encode_primary(s, scheme);
    for (std::size_t t = 0; t < s.tokens.size(); ++t) lex.add(lex.key_of(s.tokens[t]), seq.tags[t]);
  }
  return lex;
}

// Per-token majority tags, passed through tolerant repair.
inline TagSequence tag_majority(const MajorityLexicon& lex, const Sentence& s) {
  TagSequence seq{lex.scheme(), {}};
  seq.tags.reserve(s.tokens.size());
  for (const auto& t : s.tokens) seq.tags.push_back(lex.lookup(lex.key_of(t)));
  return repair(seq);
}

// Sorted TSV, key<TAB>tag<TAB>count, after two header comments.
inline void write_lexicon(std::ostream& out, const MajorityLexicon& lex) {
  out << "# scheme = " << to_string(lex.scheme()) << '\n';
  out << "# key = " << to_string(lex.key_mode()) << '\n';
  for (const auto& [key, tags] : lex.counts()) {
    for (const auto& [tag, n] : tags) out << key << '\t' << tag << '\t' << n << '\n';
  }
}

inline MajorityLexicon read_lexicon(std::istream& in) {
  using namespace conll_detail;
  Scheme scheme;
  LexiconKey key = LexiconKey::Form;
  std::vector<std::tuple<std::string, std::string, std::size_t>> rows;
  std::string buffer;
  std::size_t line_no = 0;
  while (std::getline(in, buffer)) {
    ++line_no;
    std::string_view line = rtrim(buffer);
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (auto v = comment_value(line, "scheme")) {
        try {
          scheme = parse_scheme(*v);
        } catch (const ConfigError& e) {
          throw ParseError(line_no, e.what());
        }
      } else if (auto v = comment_value(line, "key")) {
        if (*v == "form") {
          key = LexiconKey::Form;
        } else if (*v == "lemma") {
          key = LexiconKey::Lemma;
        } else {
          throw ParseError(line_no, "unknown lexicon key '" + *v + "'");
        }
      }
      continue;
    }
    auto fields = split(line, '\t');
    if (fields.size() != 3) throw ParseError(line_no, "expected key<TAB>tag<TAB>count");
    auto n = to_int<std::size_t>(fields[2]);
    if (!n) throw ParseError(line_no, "non-integer count '" + fields[2] + "'");
    rows.emplace_back(fields[0], fields[1], *n);
  }
  MajorityLexicon lex(scheme, key);
  for (const auto& [k, tag, n] : rows) lex.add(k, tag, n);
  return lex;
}

}  // namespace modality
