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

#include <optional>
#include <string>
#include <vector>

#include "modality/corpus.hpp"

namespace modality::testing {

inline Token make_token(std::size_t i, std::string form, std::string lemma, std::string pos,
                        std::optional<std::size_t> head, std::string rel) {
  return Token{i, std::move(form), std::move(lemma), std::move(pos), head, std::move(rel)};
}

// "Japan has taken a leading role in the international drive to rebuild
// Afghanistan": trigger "drive" (plans_goals), event "to rebuild
// Afghanistan", head "rebuild".
inline Sentence japan_sentence() {
  Sentence s;
  s.doc_id = "mpqa/japan";
  s.sent_id = 3;
  s.tokens = {
      make_token(0, "Japan", "Japan", "PROPN", 2, "nsubj"),
      make_token(1, "has", "have", "AUX", 2, "aux"),
      make_token(2, "taken", "take", "VERB", std::nullopt, "ROOT"),
      make_token(3, "a", "a", "DET", 5, "det"),
      make_token(4, "leading", "lead", "VERB", 5, "amod"),
      make_token(5, "role", "role", "NOUN", 2, "dobj"),
      make_token(6, "in", "in", "ADP", 5, "prep"),
      make_token(7, "the", "the", "DET", 9, "det"),
      make_token(8, "international", "international", "ADJ", 9, "amod"),
      make_token(9, "drive", "drive", "NOUN", 6, "pobj"),
      make_token(10, "to", "to", "PART", 11, "aux"),
      make_token(11, "rebuild", "rebuild", "VERB", 9, "acl"),
      make_token(12, "Afghanistan", "Afghanistan", "PROPN", 11, "dobj"),
  };
  s.instances = {ModalInstance{Span{9, 9}, FineSense::PlansGoals, Span{10, 12}, 11}};
  return s;
}

// The same sentence in the file format.
inline const char* japan_conll() {
  return "# doc_id = mpqa/japan\n"
         "# sent_id = 3\n"
         "0\tJapan\tJapan\tPROPN\t2\tnsubj\tO\tO\tO\t_\n"
         "1\thas\thave\tAUX\t2\taux\tO\tO\tO\t_\n"
         "2\ttaken\ttake\tVERB\t-1\tROOT\tO\tO\tO\t_\n"
         "3\ta\ta\tDET\t5\tdet\tO\tO\tO\t_\n"
         "4\tleading\tlead\tVERB\t5\tamod\tO\tO\tO\t_\n"
         "5\trole\trole\tNOUN\t2\tdobj\tO\tO\tO\t_\n"
         "6\tin\tin\tADP\t5\tprep\tO\tO\tO\t_\n"
         "7\tthe\tthe\tDET\t9\tdet\tO\tO\tO\t_\n"
         "8\tinternational\tinternational\tADJ\t9\tamod\tO\tO\tO\t_\n"
         "9\tdrive\tdrive\tNOUN\t6\tpobj\tS-plans_goals\tS-plans_goals\tB-T\t1\n"
         "10\tto\tto\tPART\t11\taux\tO\tO\tI-E\t1\n"
         "11\trebuild\trebuild\tVERB\t9\tacl\tO\tH\tI-E\t1\n"
         "12\tAfghanistan\tAfghanistan\tPROPN\t11\tdobj\tO\tO\tI-E\t1\n"
         "\n";
}

// Flat sentence without annotations; each token attaches to its left
// neighbour.
inline Sentence plain_sentence(std::string doc, std::int64_t id,
                               const std::vector<std::string>& forms,
                               const std::vector<std::string>& pos = {}) {
  Sentence s;
  s.doc_id = std::move(doc);
  s.sent_id = id;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    s.tokens.push_back(make_token(i, forms[i], forms[i], pos.empty() ? "X" : pos[i],
                                  i == 0 ? std::nullopt : std::optional<std::size_t>(i - 1),
                                  i == 0 ? "ROOT" : "dep"));
  }
  return s;
}

}  // namespace modality::testing
