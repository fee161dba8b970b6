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

// Codecs between modal instances and per-token tag sequences.
//
// Schemes and the tags they emit (label = sense at the scheme granularity):
//
//   trigger_biose            B-/I-/E-/S-label on trigger tokens
//   trigger_biose_with_head  trigger tags plus H on the event head
//   trigger_biose_plus_head  same tag grammar, used as a joint target
//   event_span_bio           B-E I-E ... over the event span
//   event_head               H on the event head
//   joint_event_trigger      one BIO chunk over trigger and event when they
//                            touch: trigger tokens carry T (B-T-label, or
//                            B-T without sense), event tokens E; a trigger
//                            separated from its event yields two chunks
//
// Each scheme represents only part of an instance; view() gives that part and
// decode(encode(s)) reproduces the views of all encoded instances.
//
// Sentences whose annotations cannot share one sequence are resolved while
// encoding. trigger_biose places triggers longest first (ties leftmost) and
// drops those that overlap a placed one. The other schemes place instances by
// trigger start and move each instance that does not fit into a sequence of
// its own. Fit is judged on fine_full labels whatever the scheme granularity.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "modality/chunking.hpp"
#include "modality/conll.hpp"
#include "modality/corpus.hpp"
#include "modality/error.hpp"
#include "modality/tags.hpp"
#include "modality/taxonomy.hpp"

namespace modality {

enum class SchemeKind {
  TriggerBiose,
  TriggerBioseWithHead,
  EventSpanBio,
  EventHead,
  JointEventTrigger,
  TriggerBiosePlusHead,
};

inline constexpr std::array<SchemeKind, 6> kSchemeKinds = {
    SchemeKind::TriggerBiose,      SchemeKind::TriggerBioseWithHead,
    SchemeKind::EventSpanBio,      SchemeKind::EventHead,
    SchemeKind::JointEventTrigger, SchemeKind::TriggerBiosePlusHead};

struct Scheme {
  SchemeKind kind = SchemeKind::TriggerBiose;
  Granularity granularity = Granularity::FineConflated;
  bool with_sense = true;  // joint_event_trigger only

  bool is_trigger_biose() const {
    return kind == SchemeKind::TriggerBiose || kind == SchemeKind::TriggerBioseWithHead ||
           kind == SchemeKind::TriggerBiosePlusHead;
  }
  bool has_heads() const {
    return kind == SchemeKind::TriggerBioseWithHead ||
           kind == SchemeKind::TriggerBiosePlusHead || kind == SchemeKind::EventHead;
  }
  bool carries_sense() const {
    return is_trigger_biose() || (kind == SchemeKind::JointEventTrigger && with_sense);
  }

  bool operator==(const Scheme& o) const {
    if (kind != o.kind) return false;
    if (kind == SchemeKind::JointEventTrigger && with_sense != o.with_sense) return false;
    return !carries_sense() || granularity == o.granularity;
  }
};

inline std::string_view to_string(SchemeKind k) {
  switch (k) {
    case SchemeKind::TriggerBiose: return "trigger_biose";
    case SchemeKind::TriggerBioseWithHead: return "trigger_biose_with_head";
    case SchemeKind::EventSpanBio: return "event_span_bio";
    case SchemeKind::EventHead: return "event_head";
    case SchemeKind::JointEventTrigger: return "joint_event_trigger";
    case SchemeKind::TriggerBiosePlusHead: return "trigger_biose_plus_head";
  }
  return "";
}

// "kind", "kind:granularity", or "joint_event_trigger:granularity:nosense".
inline std::string to_string(const Scheme& s) {
  std::string out(to_string(s.kind));
  if (s.carries_sense()) out += ":" + std::string(to_string(s.granularity));
  if (s.kind == SchemeKind::JointEventTrigger && !s.with_sense) out += ":nosense";
  return out;
}

inline Scheme parse_scheme(std::string_view text) {
  auto parts = conll_detail::split(text, ':');
  Scheme s;
  bool found = false;
  for (auto k : kSchemeKinds) {
    if (parts[0] == to_string(k)) {
      s.kind = k;
      found = true;
    }
  }
  if (!found) throw ConfigError("unknown scheme '" + std::string(text) + "'");
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i] == "nosense" && s.kind == SchemeKind::JointEventTrigger) {
      s.with_sense = false;
    } else if (parts[i] == "sense" && s.kind == SchemeKind::JointEventTrigger) {
      s.with_sense = true;
    } else if (auto g = parse_granularity(parts[i])) {
      s.granularity = *g;
    } else {
      throw ConfigError("bad scheme option '" + parts[i] + "' in '" + std::string(text) + "'");
    }
  }
  return s;
}

// Tag column of the corpus grammar that carries this scheme's tags.
inline TagColumn column_for(const Scheme& s) {
  switch (s.kind) {
    case SchemeKind::TriggerBiose: return TagColumn::Trigger;
    case SchemeKind::TriggerBioseWithHead:
    case SchemeKind::TriggerBiosePlusHead:
    case SchemeKind::EventHead: return TagColumn::EventHead;
    case SchemeKind::EventSpanBio:
    case SchemeKind::JointEventTrigger: return TagColumn::EventSpan;
  }
  return TagColumn::Trigger;
}

struct TagSequence {
  Scheme scheme;
  std::vector<std::string> tags;

  bool operator==(const TagSequence&) const = default;
};

// What a scheme can represent of a modal instance.
struct Annotation {
  std::optional<Span> trigger;
  std::string label;
  std::optional<Span> event;
  std::optional<std::size_t> head;

  auto operator<=>(const Annotation&) const = default;
};

inline std::vector<Annotation> view(const ModalInstance& inst, const Scheme& scheme) {
  const std::string label =
      scheme.carries_sense() ? label_at(inst.sense, scheme.granularity) : std::string();
  switch (scheme.kind) {
    case SchemeKind::TriggerBiose:
      return {Annotation{inst.trigger, label, {}, {}}};
    case SchemeKind::TriggerBioseWithHead:
    case SchemeKind::TriggerBiosePlusHead: {
      std::vector<Annotation> out{Annotation{inst.trigger, label, {}, {}}};
      // A head on the trigger itself is not representable; the trigger wins.
      if (inst.event_head && !inst.trigger.contains(*inst.event_head)) {
        out.push_back(Annotation{{}, {}, {}, inst.event_head});
      }
      return out;
    }
    case SchemeKind::EventSpanBio:
      if (!inst.event) return {};
      return {Annotation{{}, {}, inst.event, {}}};
    case SchemeKind::EventHead:
      if (!inst.event_head) return {};
      return {Annotation{{}, {}, {}, inst.event_head}};
    case SchemeKind::JointEventTrigger: {
      // Event tokens exclusive of the trigger; the hull keeps a trigger that
      // sits strictly inside the event.
      std::optional<Span> event;
      if (inst.event) {
        for (std::size_t i = inst.event->start; i <= inst.event->end; ++i) {
          if (inst.trigger.contains(i)) continue;
          if (!event) {
            event = Span{i, i};
          } else {
            event->end = i;
          }
        }
      }
      return {Annotation{inst.trigger, label, event, {}}};
    }
  }
  return {};
}

namespace scheme_detail {

inline std::string biose_tag(std::size_t i, const Span& span, const std::string& label) {
  char prefix = 'I';
  if (span.size() == 1) {
    prefix = 'S';
  } else if (i == span.start) {
    prefix = 'B';
  } else if (i == span.end) {
    prefix = 'E';
  }
  return label.empty() ? std::string(1, prefix) : std::string(1, prefix) + "-" + label;
}

// Writes `tag` at position i unless a different tag is already there.
inline bool put(std::vector<std::string>& tags, std::size_t i, const std::string& tag) {
  if (tags[i] != "O" && tags[i] != tag) return false;
  tags[i] = tag;
  return true;
}

inline bool render_annotation(std::vector<std::string>& tags, const Annotation& a,
                              const Scheme& scheme) {
  const std::size_t n = tags.size();
  if (scheme.kind == SchemeKind::JointEventTrigger) {
    std::vector<char> role(n, 0);
    for (std::size_t i = a.trigger->start; i <= a.trigger->end; ++i) role[i] = 'T';
    if (a.event) {
      for (std::size_t i = a.event->start; i <= a.event->end; ++i) {
        if (!role[i]) role[i] = 'E';
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!role[i]) continue;
      const char prefix = (i == 0 || !role[i - 1]) ? 'B' : 'I';
      std::string tag = std::string(1, prefix) + "-" + role[i];
      if (role[i] == 'T' && !a.label.empty()) tag += "-" + a.label;
      if (!put(tags, i, tag)) return false;
    }
    return true;
  }
  if (a.trigger) {
    for (std::size_t i = a.trigger->start; i <= a.trigger->end; ++i) {
      if (!put(tags, i, biose_tag(i, *a.trigger, a.label))) return false;
    }
  }
  if (a.event) {
    for (std::size_t i = a.event->start; i <= a.event->end; ++i) {
      if (!put(tags, i, i == a.event->start ? "B-E" : "I-E")) return false;
    }
  }
  if (a.head && !put(tags, *a.head, "H")) return false;
  return true;
}

inline std::vector<Annotation> views_of(std::span<const ModalInstance> instances,
                                        const Scheme& scheme) {
  std::set<Annotation> all;
  for (const auto& inst : instances) {
    for (auto& a : view(inst, scheme)) all.insert(std::move(a));
  }
  return {all.begin(), all.end()};
}

inline std::optional<std::vector<std::string>> render(std::span<const Annotation> annotations,
                                                      std::size_t n, const Scheme& scheme) {
  std::vector<std::string> tags(n, "O");
  for (const auto& a : annotations) {
    if (!render_annotation(tags, a, scheme)) return std::nullopt;
  }
  return tags;
}

}  // namespace scheme_detail

struct Violation {
  std::size_t index = 0;
  std::string message;
};

// Well-formedness of a tag sequence under its scheme: the tag alphabet, the
// label set of the granularity, and the chunk transitions. Returns the first
// violation, or nullopt.
inline std::optional<Violation> check_well_formed(const TagSequence& seq) {
  const Scheme& scheme = seq.scheme;
  const auto& tags = seq.tags;
  auto bad = [](std::size_t i, std::string msg) { return Violation{i, std::move(msg)}; };

  if (scheme.is_trigger_biose()) {
    std::optional<std::string> open;  // label of the chunk awaiting I/E
    for (std::size_t i = 0; i < tags.size(); ++i) {
      auto t = parse_tag(tags[i]);
      if (!t) return bad(i, "malformed tag '" + tags[i] + "'");
      if (t->role == TagRole::Head && !scheme.has_heads()) {
        return bad(i, "H is not part of " + to_string(scheme));
      }
      if (t->role != TagRole::Trigger && t->role != TagRole::Outside &&
          t->role != TagRole::Head) {
        return bad(i, "tag '" + tags[i] + "' is not a BIOSE trigger tag");
      }
      if (t->role == TagRole::Trigger && !is_label_at(t->label, scheme.granularity)) {
        return bad(i, "label '" + t->label + "' is not a " +
                          std::string(to_string(scheme.granularity)) + " label");
      }
      const bool continues = t->prefix == 'I' || t->prefix == 'E';
      if (open) {
        if (!continues || t->role != TagRole::Trigger) {
          return bad(i, "chunk opened before position " + std::to_string(i) + " is not closed");
        }
        if (t->label != *open) return bad(i, "label changes inside a chunk");
        if (t->prefix == 'E') open.reset();
      } else {
        if (continues) return bad(i, std::string(1, t->prefix) + " without a preceding B");
        if (t->prefix == 'B') open = t->label;
      }
    }
    if (open) return bad(tags.empty() ? 0 : tags.size() - 1, "chunk not closed at end");
    return std::nullopt;
  }

  if (scheme.kind == SchemeKind::EventHead) {
    for (std::size_t i = 0; i < tags.size(); ++i) {
      if (tags[i] != "O" && tags[i] != "H") return bad(i, "expected O or H, got '" + tags[i] + "'");
    }
    return std::nullopt;
  }

  // BIO schemes.
  const bool joint = scheme.kind == SchemeKind::JointEventTrigger;
  bool in_chunk = false;
  bool seen_trigger = false, trigger_closed = false;
  std::string trigger_label;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    auto t = parse_tag(tags[i]);
    if (!t) return bad(i, "malformed tag '" + tags[i] + "'");
    if (t->role == TagRole::Outside) {
      in_chunk = false;
      continue;
    }
    const bool allowed = t->role == TagRole::Event || (joint && t->role == TagRole::JointTrigger);
    if (!allowed) return bad(i, "tag '" + tags[i] + "' is not part of " + to_string(scheme));
    if (t->prefix == 'I' && !in_chunk) return bad(i, "I without a preceding B");
    if (t->prefix == 'B') {
      in_chunk = true;
      seen_trigger = trigger_closed = false;
    }
    if (t->role == TagRole::JointTrigger) {
      if (scheme.with_sense ? !is_label_at(t->label, scheme.granularity) : !t->label.empty()) {
        return bad(i, "bad trigger label in '" + tags[i] + "'");
      }
      if (trigger_closed) return bad(i, "second trigger run inside a chunk");
      if (seen_trigger && t->label != trigger_label) return bad(i, "trigger label changes");
      seen_trigger = true;
      trigger_label = t->label;
    } else if (seen_trigger) {
      trigger_closed = true;
    }
  }
  return std::nullopt;
}

// Rewrites any tag sequence into a well-formed one with the same chunks as
// ConllEval would read them (BIOSE schemes) or BIO chunks (span schemes). An
// I or E without a B opens a chunk where it stands. Unparseable tags become O.
inline TagSequence repair(const TagSequence& seq) {
  const Scheme& scheme = seq.scheme;
  const std::size_t n = seq.tags.size();
  TagSequence out{scheme, std::vector<std::string>(n, "O")};

  if (scheme.is_trigger_biose()) {
    for (const auto& c : conll_chunks(seq.tags)) {
      if (c.type == "H") {
        if (scheme.has_heads()) {
          for (std::size_t i = c.start; i <= c.end; ++i) out.tags[i] = "H";
        }
        continue;
      }
      const Span span{c.start, c.end};
      for (std::size_t i = c.start; i <= c.end; ++i) {
        out.tags[i] = scheme_detail::biose_tag(i, span, c.type);
      }
    }
    return out;
  }

  if (scheme.kind == SchemeKind::EventHead) {
    for (std::size_t i = 0; i < n; ++i) {
      if (seq.tags[i] == "H") out.tags[i] = "H";
    }
    return out;
  }

  const bool joint = scheme.kind == SchemeKind::JointEventTrigger;
  for (const auto& c : bio_chunks(seq.tags)) {
    bool seen_trigger = false, trigger_closed = false;
    std::string label;
    for (std::size_t i = c.start; i <= c.end; ++i) {
      auto t = parse_tag(seq.tags[i]);
      const bool is_trigger = joint && t && t->role == TagRole::JointTrigger && !trigger_closed;
      const std::string prefix = i == c.start ? "B" : "I";
      if (is_trigger) {
        if (!seen_trigger) label = t->label;
        seen_trigger = true;
        out.tags[i] = prefix + "-T" + (label.empty() ? "" : "-" + label);
      } else {
        if (seen_trigger) trigger_closed = true;
        out.tags[i] = prefix + "-E";
      }
    }
  }
  return out;
}

namespace scheme_detail {

// Decoding of a sequence already known to be well-formed.
inline std::vector<Annotation> decode_well_formed(const TagSequence& seq) {
  const Scheme& scheme = seq.scheme;
  std::vector<Annotation> out;

  if (scheme.is_trigger_biose()) {
    for (const auto& c : conll_chunks(seq.tags)) {
      if (c.type == "H") {
        out.push_back(Annotation{{}, {}, {}, c.start});
      } else {
        out.push_back(Annotation{Span{c.start, c.end}, c.type, {}, {}});
      }
    }
  } else if (scheme.kind == SchemeKind::EventHead) {
    for (std::size_t i = 0; i < seq.tags.size(); ++i) {
      if (seq.tags[i] == "H") out.push_back(Annotation{{}, {}, {}, i});
    }
  } else if (scheme.kind == SchemeKind::EventSpanBio) {
    for (const auto& c : bio_chunks(seq.tags)) {
      out.push_back(Annotation{{}, {}, Span{c.start, c.end}, {}});
    }
  } else {
    // Joint: one annotation per chunk, then pair trigger-only chunks with the
    // event-only chunk right after them, else right before them.
    struct Piece {
      std::optional<Span> trigger;
      std::string label;
      std::optional<Span> event;
      bool used = false;
    };
    std::vector<Piece> pieces;
    for (const auto& c : bio_chunks(seq.tags)) {
      Piece p;
      for (std::size_t i = c.start; i <= c.end; ++i) {
        auto t = parse_tag(seq.tags[i]);
        Span& target = t->role == TagRole::JointTrigger
                           ? (p.trigger ? *p.trigger : p.trigger.emplace(Span{i, i}))
                           : (p.event ? *p.event : p.event.emplace(Span{i, i}));
        target.end = i;
        if (t->role == TagRole::JointTrigger) p.label = t->label;
      }
      pieces.push_back(std::move(p));
    }
    auto event_only = [&](std::size_t k) {
      return k < pieces.size() && !pieces[k].used && !pieces[k].trigger && pieces[k].event;
    };
    for (std::size_t k = 0; k < pieces.size(); ++k) {
      if (pieces[k].trigger && !pieces[k].event && event_only(k + 1)) {
        pieces[k].event = pieces[k + 1].event;
        pieces[k + 1].used = true;
      }
    }
    for (std::size_t k = 1; k < pieces.size(); ++k) {
      if (pieces[k].trigger && !pieces[k].event && event_only(k - 1)) {
        pieces[k].event = pieces[k - 1].event;
        pieces[k - 1].used = true;
      }
    }
    for (auto& p : pieces) {
      if (p.used) continue;
      out.push_back(Annotation{p.trigger, p.label, p.event, {}});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace scheme_detail

enum class DecodeMode { Strict, Tolerant };

// Annotations of a tag sequence, sorted. Strict mode throws DecodeError at the
// first ill-formed position; tolerant mode repairs first.
inline std::vector<Annotation> decode(const TagSequence& seq, std::size_t sentence_length,
                                      DecodeMode mode = DecodeMode::Tolerant) {
  if (seq.tags.size() != sentence_length) {
    throw InputError("tag sequence of length " + std::to_string(seq.tags.size()) +
                     " for a sentence of " + std::to_string(sentence_length) + " tokens");
  }
  if (mode == DecodeMode::Strict) {
    if (auto v = check_well_formed(seq)) throw DecodeError(v->index, v->message);
    return scheme_detail::decode_well_formed(seq);
  }
  return scheme_detail::decode_well_formed(repair(seq));
}

struct Encoding {
  TagSequence primary;
  // Extra sequences, one per instance that could not share the primary one.
  std::vector<TagSequence> overflow;
  // Instances left out entirely (overlapping triggers in trigger_biose).
  std::vector<ModalInstance> dropped;
  std::vector<std::string> warnings;
};

inline Encoding encode(const Sentence& s, const Scheme& scheme) {
  using namespace scheme_detail;
  const std::size_t n = s.tokens.size();
  Encoding enc;
  enc.primary = TagSequence{scheme, std::vector<std::string>(n, "O")};

  std::vector<ModalInstance> order = s.instances;
  if (scheme.kind == SchemeKind::TriggerBiose) {
    std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
      if (a.trigger.size() != b.trigger.size()) return a.trigger.size() > b.trigger.size();
      return a.trigger.start < b.trigger.start;
    });
  } else {
    std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
      return a.trigger.start < b.trigger.start;
    });
  }

  auto describe = [&](const ModalInstance& inst) {
    return s.doc_id + "#" + std::to_string(s.sent_id) + ": instance with trigger " +
           std::to_string(inst.trigger.start) + "-" + std::to_string(inst.trigger.end) +
           " (" + std::string(to_string(inst.sense)) + ")";
  };

  // Placement is decided at the finest granularity, so that coarser
  // encodings are exactly the tag-wise projections of finer ones.
  Scheme finest = scheme;
  if (finest.carries_sense()) finest.granularity = Granularity::FineFull;
  std::vector<ModalInstance> placed;
  for (const auto& inst : order) {
    placed.push_back(inst);
    const auto wanted = views_of(placed, finest);
    auto tags = render(wanted, n, finest);
    if (tags && decode_well_formed(TagSequence{finest, *tags}) == wanted) continue;
    placed.pop_back();
    if (scheme.kind == SchemeKind::TriggerBiose) {
      enc.dropped.push_back(inst);
      enc.warnings.push_back(describe(inst) + " overlaps a longer trigger; dropped");
      continue;
    }
    const std::vector<ModalInstance> alone{inst};
    auto own = render(views_of(alone, scheme), n, scheme);
    enc.overflow.push_back(TagSequence{scheme, std::move(*own)});
    enc.warnings.push_back(describe(inst) + " conflicts with an earlier instance; moved to "
                           "overflow sequence " + std::to_string(enc.overflow.size()));
  }
  if (!placed.empty()) enc.primary.tags = *render(views_of(placed, scheme), n, scheme);
  return enc;
}

// Tags the sentence's annotations under `scheme`, primary sequence only.
inline TagSequence encode_primary(const Sentence& s, const Scheme& scheme) {
  return encode(s, scheme).primary;
}

// Reserved span markers inserted into model inputs.
inline constexpr std::string_view kTriggerOpen = "<t>";
inline constexpr std::string_view kTriggerClose = "</t>";
inline constexpr std::string_view kHeadOpen = "<h>";
inline constexpr std::string_view kHeadClose = "</h>";

enum class MarkRole { Trigger, Head };

struct MarkedSpan {
  Span span;
  MarkRole role = MarkRole::Trigger;
};

struct MarkedTokens {
  std::vector<std::string> tokens;
  // Original token index -> position in `tokens`.
  std::vector<std::size_t> position_of;
  // Position in `tokens` -> original index; nullopt for markers.
  std::vector<std::optional<std::size_t>> origin;
};

// Escapes corpus tokens that would read as markers by prefixing a backslash;
// tokens already of the form \...\<marker> get one more.
inline std::string escape_marker(std::string_view form) {
  std::string_view bare = form;
  while (bare.starts_with('\\')) bare.remove_prefix(1);
  if (bare == kTriggerOpen || bare == kTriggerClose || bare == kHeadOpen || bare == kHeadClose) {
    return "\\" + std::string(form);
  }
  return std::string(form);
}

inline MarkedTokens attach_feature_marks(std::span<const std::string> forms,
                                         std::vector<MarkedSpan> spans) {
  std::sort(spans.begin(), spans.end(),
            [](const auto& a, const auto& b) { return a.span < b.span; });
  for (std::size_t k = 0; k < spans.size(); ++k) {
    if (spans[k].span.start > spans[k].span.end || spans[k].span.end >= forms.size()) {
      throw std::invalid_argument("marked span out of range");
    }
    if (k > 0 && spans[k - 1].span.overlaps(spans[k].span)) {
      throw std::invalid_argument("marked spans overlap");
    }
  }
  MarkedTokens out;
  out.position_of.resize(forms.size());
  std::size_t next = 0;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const bool opens = next < spans.size() && spans[next].span.start == i;
    if (opens) {
      out.tokens.emplace_back(spans[next].role == MarkRole::Trigger ? kTriggerOpen : kHeadOpen);
      out.origin.emplace_back(std::nullopt);
    }
    out.position_of[i] = out.tokens.size();
    out.tokens.push_back(escape_marker(forms[i]));
    out.origin.emplace_back(i);
    if (next < spans.size() && spans[next].span.end == i) {
      out.tokens.emplace_back(spans[next].role == MarkRole::Trigger ? kTriggerClose
                                                                    : kHeadClose);
      out.origin.emplace_back(std::nullopt);
      ++next;
    }
  }
  return out;
}

inline MarkedTokens attach_feature_marks(const Sentence& s, std::vector<MarkedSpan> spans) {
  std::vector<std::string> forms;
  forms.reserve(s.tokens.size());
  for (const auto& t : s.tokens) forms.push_back(t.form);
  return attach_feature_marks(forms, std::move(spans));
}

}  // namespace modality
