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

// Reads a corpus file (or the bundled sample) and prints the first annotated
// sentence under every tagging scheme, one column per scheme.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "modality/modality.hpp"

using namespace modality;

int main(int argc, char** argv) {
  const std::string path = argc > 1 ? argv[1] : SAMPLE_CORPUS;
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot read " << path << '\n';
    return 3;
  }
  Corpus corpus;
  try {
    corpus = parse_conll(in);
  } catch (const InputError& e) {
    std::cerr << path << ": " << e.what() << '\n';
    return 2;
  }
  const Sentence* s = nullptr;
  for (const auto& candidate : corpus) {
    if (!candidate.instances.empty()) {
      s = &candidate;
      break;
    }
  }
  if (!s) {
    std::cerr << "no annotated sentence in " << path << '\n';
    return 2;
  }

  const std::vector<Scheme> schemes = {
      {SchemeKind::TriggerBiose, Granularity::FineConflated},
      {SchemeKind::TriggerBioseWithHead, Granularity::Coarse},
      {SchemeKind::EventSpanBio},
      {SchemeKind::EventHead},
      {SchemeKind::JointEventTrigger, Granularity::FineConflated, false},
  };
  std::vector<std::vector<std::string>> columns;
  for (const auto& scheme : schemes) columns.push_back(encode_primary(*s, scheme).tags);

  std::cout << s->doc_id << " #" << s->sent_id << "\n\n" << std::left << std::setw(16) << "token";
  for (const auto& scheme : schemes) std::cout << std::setw(34) << to_string(scheme);
  std::cout << '\n';
  for (std::size_t i = 0; i < s->tokens.size(); ++i) {
    std::cout << std::setw(16) << s->tokens[i].form;
    for (const auto& col : columns) std::cout << std::setw(34) << col[i];
    std::cout << '\n';
  }

  const auto marked = attach_feature_marks(*s, {{s->instances[0].trigger, MarkRole::Trigger}});
  std::cout << "\nmarked input:";
  for (const auto& t : marked.tokens) std::cout << ' ' << t;
  std::cout << '\n';
  return 0;
}
