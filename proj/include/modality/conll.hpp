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

// CoNLL-style corpus files.
//
// One token per row, ten tab-separated columns:
//
//   TOKEN_INDEX FORM LEMMA UPOS DEP_HEAD DEP_REL
//   TRIGGER_TAG EVENT_HEAD_TAG EVENT_SPAN_TAG INSTANCE_ID
//
// TOKEN_INDEX is 0-based and DEP_HEAD is -1 for the root. A blank line ends a
// sentence; "# doc_id = <id>" opens a document and "# sent_id = <n>" names the
// next sentence (sequential numbering within the document when absent).
//
// INSTANCE_ID lists the modal instances a row takes part in, '|'-separated in
// ascending order, or "_" for none. Each tag column then holds either a single
// "O" or one '|'-separated entry per listed instance:
//
//   TRIGGER_TAG     BIOSE tag of the trigger with its fine sense (S-plans_goals)
//   EVENT_HEAD_TAG  the trigger tag again, with H on the event head
//   EVENT_SPAN_TAG  B-E/I-E over the event span; trigger tokens outside the
//                   span carry B-T/I-T, chunked with the span when adjacent
//
// An EVENT_HEAD_TAG column of "_" throughout a sentence means the heads are
// absent; they are then re-derived from the dependency parse.

#pragma once

#include <charconv>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "modality/corpus.hpp"
#include "modality/error.hpp"
#include "modality/tags.hpp"

namespace modality {

namespace conll_detail {

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const auto next = s.find(sep, pos);
    out.emplace_back(s.substr(pos, next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

inline std::string_view rtrim(std::string_view s) {
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' ||
                        s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

template <typename Int>
std::optional<Int> to_int(std::string_view s) {
  Int value{};
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

// Optional "key = value" comment; returns the value when the key matches.
inline std::optional<std::string> comment_value(std::string_view line,
                                                std::string_view key) {
  line.remove_prefix(1);
  while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
  if (!line.starts_with(key)) return std::nullopt;
  line.remove_prefix(key.size());
  while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
  if (line.empty() || line.front() != '=') return std::nullopt;
  line.remove_prefix(1);
  while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
  return std::string(line);
}

}  // namespace conll_detail

inline constexpr std::size_t kConllColumns = 10;

struct RawRow {
  std::size_t line = 0;
  std::vector<std::string> fields;  // kConllColumns entries
};

// A sentence block before its annotation columns are interpreted.
struct RawSentence {
  std::string doc_id;
  std::int64_t sent_id = 0;
  int overflow = 0;  // > 0 for extra encoded sequences of the same sentence
  std::size_t first_line = 0;
  std::vector<RawRow> rows;
};

// Splits a stream into sentence blocks, checking row arity and token fields.
inline std::vector<RawSentence> read_raw_conll(std::istream& in) {
  using namespace conll_detail;
  std::vector<RawSentence> out;
  std::string doc_id;
  bool has_pending_sent_id = false;
  std::int64_t pending_sent_id = 0;
  int pending_overflow = 0;
  std::int64_t next_sent_id = 0;
  RawSentence current;
  bool open = false;

  auto close = [&]() {
    if (!open) return;
    out.push_back(std::move(current));
    current = RawSentence{};
    open = false;
  };

  std::string buffer;
  std::size_t line_no = 0;
  while (std::getline(in, buffer)) {
    ++line_no;
    const std::string_view line = rtrim(buffer);
    if (line.empty()) {
      close();
      continue;
    }
    if (line.front() == '#') {
      if (auto v = comment_value(line, "doc_id")) {
        close();
        doc_id = *v;
        next_sent_id = 0;
      } else if (auto v = comment_value(line, "sent_id")) {
        close();
        auto id = to_int<std::int64_t>(*v);
        if (!id) throw ParseError(line_no, "non-integer sent_id '" + *v + "'");
        pending_sent_id = *id;
        has_pending_sent_id = true;
      } else if (auto v = comment_value(line, "overflow")) {
        close();
        auto k = to_int<int>(*v);
        if (!k || *k <= 0) throw ParseError(line_no, "bad overflow index '" + *v + "'");
        pending_overflow = *k;
      }
      continue;
    }
    auto fields = split(line, '\t');
    if (fields.size() != kConllColumns) {
      throw ParseError(line_no, "expected " + std::to_string(kConllColumns) +
                                    " columns, found " + std::to_string(fields.size()));
    }
    for (std::size_t c = 0; c < fields.size(); ++c) {
      if (fields[c].empty()) {
        throw ParseError(line_no, "empty field in column " + std::to_string(c + 1));
      }
    }
    if (!open) {
      open = true;
      current.doc_id = doc_id;
      current.first_line = line_no;
      current.overflow = pending_overflow;
      if (has_pending_sent_id) {
        current.sent_id = pending_sent_id;
        next_sent_id = pending_sent_id + 1;
      } else if (pending_overflow > 0 && !out.empty()) {
        current.sent_id = out.back().sent_id;
      } else {
        current.sent_id = next_sent_id++;
      }
      has_pending_sent_id = false;
      pending_overflow = 0;
    }
    auto index = to_int<std::size_t>(fields[0]);
    if (!index) throw ParseError(line_no, "non-integer token index '" + fields[0] + "'");
    if (*index != current.rows.size()) {
      throw ParseError(line_no, "token index " + fields[0] + " out of sequence (expected " +
                                    std::to_string(current.rows.size()) + ")");
    }
    current.rows.push_back(RawRow{line_no, std::move(fields)});
  }
  close();
  return out;
}

namespace conll_detail {

enum Col : std::size_t {
  kIndex = 0, kForm, kLemma, kPos, kHead, kRel, kTrigger, kEventHead, kEventSpan, kId
};

inline std::vector<Token> tokens_of(const RawSentence& raw) {
  std::vector<Token> tokens;
  tokens.reserve(raw.rows.size());
  for (std::size_t i = 0; i < raw.rows.size(); ++i) {
    const auto& f = raw.rows[i].fields;
    Token t;
    t.index = i;
    t.form = f[kForm];
    t.lemma = f[kLemma];
    t.pos = f[kPos];
    t.dep_rel = f[kRel];
    auto head = to_int<std::int64_t>(f[kHead]);
    if (!head) throw ParseError(raw.rows[i].line, "non-integer dependency head '" + f[kHead] + "'");
    if (*head >= 0) {
      if (static_cast<std::size_t>(*head) >= raw.rows.size()) {
        throw ParseError(raw.rows[i].line, "dependency head " + f[kHead] + " out of range");
      }
      t.dep_head = static_cast<std::size_t>(*head);
    } else if (*head != -1) {
      throw ParseError(raw.rows[i].line, "dependency head " + f[kHead] + " out of range");
    }
    tokens.push_back(std::move(t));
  }
  return tokens;
}

// Per-instance column entries, as written for one instance.
struct InstanceColumns {
  std::vector<std::string> trigger, event_head, event_span;
};

inline InstanceColumns render_instance(const ModalInstance& inst, std::size_t n) {
  InstanceColumns c;
  c.trigger.assign(n, "O");
  const std::string sense(to_string(inst.sense));
  for (std::size_t i = inst.trigger.start; i <= inst.trigger.end; ++i) {
    char prefix = 'I';
    if (inst.trigger.size() == 1) {
      prefix = 'S';
    } else if (i == inst.trigger.start) {
      prefix = 'B';
    } else if (i == inst.trigger.end) {
      prefix = 'E';
    }
    c.trigger[i] = std::string(1, prefix) + "-" + sense;
  }
  c.event_head = c.trigger;
  if (inst.event_head) c.event_head[*inst.event_head] = "H";

  c.event_span.assign(n, "O");
  std::vector<char> role(n, 0);
  for (std::size_t i = inst.trigger.start; i <= inst.trigger.end; ++i) role[i] = 'T';
  if (inst.event) {
    for (std::size_t i = inst.event->start; i <= inst.event->end; ++i) role[i] = 'E';
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!role[i]) continue;
    const char prefix = (i == 0 || !role[i - 1]) ? 'B' : 'I';
    c.event_span[i] = std::string(1, prefix) + "-" + role[i];
  }
  return c;
}

inline bool participates(const InstanceColumns& c, std::size_t i) {
  return c.trigger[i] != "O" || c.event_head[i] != "O" || c.event_span[i] != "O";
}

}  // namespace conll_detail

// Re-derives every event head from the dependency parse of its event span.
inline void rederive_event_heads(Sentence& s) {
  for (auto& inst : s.instances) {
    inst.event_head.reset();
    if (inst.event) inst.event_head = extract_event_head(s, *inst.event);
  }
}

// Interprets the annotation columns of a raw block. Strict: any inconsistency
// between the three tag columns is a ParseError. Discontiguous triggers keep
// their leftmost run; the dropped runs are reported through `warnings`.
inline Sentence build_sentence(const RawSentence& raw,
                               std::vector<std::string>* warnings = nullptr) {
  using namespace conll_detail;
  Sentence s;
  s.doc_id = raw.doc_id;
  s.sent_id = raw.sent_id;
  s.tokens = tokens_of(raw);
  const std::size_t n = s.tokens.size();

  // id -> per-token entries of each tag column
  std::map<std::int64_t, InstanceColumns> by_id;
  std::size_t heads_absent = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = raw.rows[i];
    const auto& f = row.fields;
    std::vector<std::int64_t> ids;
    if (f[kId] != "_") {
      for (const auto& part : split(f[kId], '|')) {
        auto id = to_int<std::int64_t>(part);
        if (!id) throw ParseError(row.line, "non-integer instance id '" + part + "'");
        if (!ids.empty() && *id <= ids.back()) {
          throw ParseError(row.line, "instance ids must be strictly ascending");
        }
        ids.push_back(*id);
      }
    }
    if (f[kEventHead] == "_") ++heads_absent;
    auto entries = [&](Col col) -> std::vector<std::string> {
      if (col == kEventHead && f[col] == "_") return std::vector<std::string>(ids.size(), "_");
      if (f[col] == "O") return std::vector<std::string>(ids.size(), "O");
      auto parts = split(f[col], '|');
      if (parts.size() != ids.size()) {
        throw ParseError(row.line, "column " + std::to_string(col + 1) + " has " +
                                       std::to_string(parts.size()) + " entries for " +
                                       std::to_string(ids.size()) + " instance ids");
      }
      return parts;
    };
    auto trig = entries(kTrigger);
    auto head = entries(kEventHead);
    auto span = entries(kEventSpan);
    for (std::size_t k = 0; k < ids.size(); ++k) {
      auto& cols = by_id[ids[k]];
      if (cols.trigger.empty()) {
        cols.trigger.assign(n, "O");
        cols.event_head.assign(n, "O");
        cols.event_span.assign(n, "O");
      }
      cols.trigger[i] = trig[k];
      cols.event_head[i] = head[k];
      cols.event_span[i] = span[k];
    }
  }
  if (heads_absent != 0 && heads_absent != n) {
    throw ParseError(raw.first_line, "EVENT_HEAD_TAG column mixes '_' with tags");
  }
  const bool rederive = n > 0 && heads_absent == n;

  for (const auto& [id, cols] : by_id) {
    const std::size_t line = raw.first_line;
    const std::string tag_id = "instance " + std::to_string(id);
    ModalInstance inst;

    // Trigger runs from the trigger column.
    std::optional<FineSense> sense;
    std::vector<Span> runs;
    for (std::size_t i = 0; i < n; ++i) {
      if (cols.trigger[i] == "O") continue;
      auto tag = parse_tag(cols.trigger[i]);
      if (!tag || tag->role != TagRole::Trigger) {
        throw ParseError(raw.rows[i].line, "malformed trigger tag '" + cols.trigger[i] + "'");
      }
      auto fine = parse_fine_sense(tag->label);
      if (!fine) {
        throw ParseError(raw.rows[i].line, "unknown sense label '" + tag->label + "'");
      }
      if (sense && *sense != *fine) {
        throw ParseError(raw.rows[i].line, tag_id + " mixes senses");
      }
      sense = *fine;
      if (!runs.empty() && runs.back().end + 1 == i &&
          (tag->prefix == 'I' || tag->prefix == 'E')) {
        runs.back().end = i;
      } else {
        runs.push_back(Span{i, i});
      }
    }
    if (runs.empty()) throw ParseError(line, tag_id + " has no trigger tokens");
    if (runs.size() > 1 && warnings) {
      warnings->push_back(s.doc_id + "#" + std::to_string(s.sent_id) + ": " + tag_id +
                          " has a discontiguous trigger; keeping tokens " +
                          std::to_string(runs.front().start) + "-" +
                          std::to_string(runs.front().end));
    }
    inst.trigger = runs.front();
    inst.sense = *sense;

    // Event span: the E-role tokens of the span column.
    std::optional<Span> event;
    for (std::size_t i = 0; i < n; ++i) {
      auto tag = parse_tag(cols.event_span[i]);
      if (!tag) {
        throw ParseError(raw.rows[i].line,
                         "malformed event span tag '" + cols.event_span[i] + "'");
      }
      if (tag->role != TagRole::Event) continue;
      if (event && event->end + 1 != i) {
        throw ParseError(raw.rows[i].line, tag_id + " has a discontiguous event span");
      }
      if (event) {
        event->end = i;
      } else {
        event = Span{i, i};
      }
    }
    inst.event = event;

    if (!rederive) {
      for (std::size_t i = 0; i < n; ++i) {
        if (cols.event_head[i] != "H") continue;
        if (inst.event_head) {
          throw ParseError(raw.rows[i].line, tag_id + " has more than one event head");
        }
        inst.event_head = i;
      }
      if (inst.event_head && inst.event && !inst.event->contains(*inst.event_head)) {
        throw ParseError(raw.rows[*inst.event_head].line,
                         tag_id + " event head lies outside its event span");
      }
    }

    // The columns must be exactly what the instance renders to.
    // A discontiguous trigger is only checked on the run that is kept.
    auto expected = render_instance(inst, n);
    for (std::size_t i = inst.trigger.start; i <= inst.trigger.end; ++i) {
      if (parse_tag(cols.trigger[i])->prefix != parse_tag(expected.trigger[i])->prefix) {
        throw ParseError(raw.rows[i].line, tag_id + " trigger tags are not well-formed BIOSE");
      }
    }
    if (runs.size() == 1) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!rederive && expected.event_head[i] != cols.event_head[i] &&
            !(cols.event_head[i] == "O" && expected.event_head[i] == "O")) {
          // Aliased sense spellings are accepted as long as the structure matches.
          auto want = parse_tag(expected.event_head[i]);
          auto got = parse_tag(cols.event_head[i]);
          if (!got || want->prefix != got->prefix || want->role != got->role ||
              parse_fine_sense(want->label) != parse_fine_sense(got->label)) {
            throw ParseError(raw.rows[i].line, tag_id + " event head column disagrees with "
                                                        "its trigger tags");
          }
        }
        if (expected.event_span[i] != cols.event_span[i]) {
          throw ParseError(raw.rows[i].line, tag_id + " event span column is inconsistent");
        }
      }
    }
    s.instances.push_back(inst);
  }

  if (rederive) rederive_event_heads(s);
  try {
    validate(s);
  } catch (const InputError& e) {
    throw ParseError(raw.first_line, e.what());
  }
  return s;
}

// Parses a whole corpus file. Strict: malformed rows, bad indices, spans out
// of range and unknown sense labels raise ParseError with the line number.
inline Corpus parse_conll(std::istream& in, std::vector<std::string>* warnings = nullptr) {
  Corpus corpus;
  for (const auto& raw : read_raw_conll(in)) {
    if (raw.overflow > 0) continue;
    corpus.push_back(build_sentence(raw, warnings));
  }
  return corpus;
}

inline Corpus parse_conll(std::string_view text, std::vector<std::string>* warnings = nullptr) {
  std::istringstream in{std::string(text)};
  return parse_conll(in, warnings);
}

namespace conll_detail {

inline void write_token_fields(std::ostream& out, const Token& t) {
  out << t.index << '\t' << t.form << '\t' << t.lemma << '\t' << t.pos << '\t'
      << (t.dep_head ? static_cast<std::int64_t>(*t.dep_head) : std::int64_t{-1}) << '\t'
      << t.dep_rel;
}

inline void write_sentence_header(std::ostream& out, const Sentence& s,
                                  const std::string*& last_doc, int overflow = 0) {
  if (!last_doc || *last_doc != s.doc_id) {
    out << "# doc_id = " << s.doc_id << '\n';
    last_doc = &s.doc_id;
  }
  if (overflow > 0) {
    out << "# overflow = " << overflow << '\n';
  } else {
    out << "# sent_id = " << s.sent_id << '\n';
  }
}

}  // namespace conll_detail

inline void write_conll(std::ostream& out, const Corpus& corpus) {
  using namespace conll_detail;
  const std::string* last_doc = nullptr;
  for (const auto& s : corpus) {
    write_sentence_header(out, s, last_doc);
    const std::size_t n = s.tokens.size();
    std::vector<InstanceColumns> cols;
    cols.reserve(s.instances.size());
    for (const auto& inst : s.instances) cols.push_back(render_instance(inst, n));
    for (std::size_t i = 0; i < n; ++i) {
      write_token_fields(out, s.tokens[i]);
      std::vector<std::size_t> members;
      for (std::size_t k = 0; k < cols.size(); ++k) {
        if (participates(cols[k], i)) members.push_back(k);
      }
      auto column = [&](auto field) {
        if (members.empty()) return std::string("O");
        std::string joined;
        bool any = false;
        for (std::size_t m = 0; m < members.size(); ++m) {
          const std::string& v = (cols[members[m]].*field)[i];
          any |= v != "O";
          if (m) joined += '|';
          joined += v;
        }
        return any ? joined : std::string("O");
      };
      out << '\t' << column(&InstanceColumns::trigger) << '\t'
          << column(&InstanceColumns::event_head) << '\t'
          << column(&InstanceColumns::event_span) << '\t';
      if (members.empty()) {
        out << '_';
      } else {
        for (std::size_t m = 0; m < members.size(); ++m) {
          if (m) out << '|';
          out << members[m] + 1;
        }
      }
      out << '\n';
    }
    out << '\n';
  }
}

inline std::string write_conll(const Corpus& corpus) {
  std::ostringstream out;
  write_conll(out, corpus);
  return out.str();
}

// Flat per-sentence tag columns, as produced by `encode` and by external
// models. Tags are kept verbatim; decoding them is the caller's business.
struct TaggedSentence {
  SentenceId id;
  int overflow = 0;
  std::vector<std::string> forms;
  std::vector<std::string> trigger_tags;
  std::vector<std::string> head_tags;
  std::vector<std::string> span_tags;
};

enum class TagColumn { Trigger, EventHead, EventSpan };

inline const std::vector<std::string>& column(const TaggedSentence& s, TagColumn c) {
  switch (c) {
    case TagColumn::Trigger: return s.trigger_tags;
    case TagColumn::EventHead: return s.head_tags;
    case TagColumn::EventSpan: return s.span_tags;
  }
  return s.trigger_tags;
}

// Reads a flat tag file. Tag columns must hold exactly one tag per row.
inline std::vector<TaggedSentence> read_tagged(std::istream& in) {
  using namespace conll_detail;
  std::vector<TaggedSentence> out;
  for (const auto& raw : read_raw_conll(in)) {
    TaggedSentence t;
    t.id = {raw.doc_id, raw.sent_id};
    t.overflow = raw.overflow;
    for (const auto& row : raw.rows) {
      for (Col c : {kTrigger, kEventHead, kEventSpan}) {
        if (row.fields[c].find('|') != std::string::npos) {
          throw ParseError(row.line, "tag file rows carry a single tag per column");
        }
      }
      t.forms.push_back(row.fields[kForm]);
      t.trigger_tags.push_back(row.fields[kTrigger]);
      t.head_tags.push_back(row.fields[kEventHead]);
      t.span_tags.push_back(row.fields[kEventSpan]);
    }
    out.push_back(std::move(t));
  }
  return out;
}

// Writes one tag sequence per sentence into `col`, with token fields taken
// from the sentence and the other tag columns left as O.
inline void write_tagged(std::ostream& out, const Sentence& s,
                         const std::vector<std::string>& tags, TagColumn col,
                         const std::string*& last_doc, int overflow = 0) {
  using namespace conll_detail;
  if (tags.size() != s.tokens.size()) {
    throw InputError("tag sequence length does not match sentence " + s.doc_id + "#" +
                     std::to_string(s.sent_id));
  }
  write_sentence_header(out, s, last_doc, overflow);
  for (std::size_t i = 0; i < tags.size(); ++i) {
    write_token_fields(out, s.tokens[i]);
    out << '\t' << (col == TagColumn::Trigger ? tags[i] : "O") << '\t'
        << (col == TagColumn::EventHead ? tags[i] : "O") << '\t'
        << (col == TagColumn::EventSpan ? tags[i] : "O") << "\t_\n";
  }
  out << '\n';
}

}  // namespace modality
