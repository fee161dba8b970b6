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

// Acceptance checks. `acceptance --criterion N` prints one PASS or FAIL line
// and exits 0 on pass, 1 on fail.
//
// Criteria 1 and 2 need the processed GME corpus and its published split
// manifest, given by MODALITY_GME_CORPUS and MODALITY_GME_MANIFEST.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "modality/modality.hpp"
#include "support/conlleval_reference.hpp"
#include "support/synthetic.hpp"

using namespace modality;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fixed2(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

struct GmeData {
  Corpus corpus;
  SplitManifest manifest;
};

// Loads the corpus and manifest named by the environment, or records why not.
bool load_gme(Outcome& out, GmeData& data, double& load_seconds) {
  const char* corpus_path = std::getenv("MODALITY_GME_CORPUS");
  const char* manifest_path = std::getenv("MODALITY_GME_MANIFEST");
  if (!corpus_path || !manifest_path) {
    out.require(false,
                "GME corpus unavailable: set MODALITY_GME_CORPUS and MODALITY_GME_MANIFEST");
    return false;
  }
  try {
    Timer t;
    std::ifstream in(corpus_path);
    if (!in) throw InputError(std::string("cannot open ") + corpus_path);
    data.corpus = parse_conll(in);
    data.manifest = load_manifest(manifest_path);
    load_seconds = t.seconds();
  } catch (const std::exception& e) {
    out.require(false, e.what());
    return false;
  }
  return true;
}

// Tokens inside trigger spans, each token counted once per sentence.
std::size_t trigger_tokens(const Corpus& corpus, const std::vector<std::size_t>& rows) {
  std::size_t n = 0;
  for (auto i : rows) {
    std::set<std::size_t> covered;
    for (const auto& inst : corpus[i].instances) {
      for (auto k = inst.trigger.start; k <= inst.trigger.end; ++k) covered.insert(k);
    }
    n += covered.size();
  }
  return n;
}

Outcome corpus_stats() {
  Outcome out;
  GmeData data;
  double seconds = 0;
  if (!load_gme(out, data, seconds)) return out;
  Timer t;
  const CorpusStats st = compute_stats(data.corpus);
  const std::vector<std::pair<FineSense, std::size_t>> expected = {
      {FineSense::RulesNorms, 2316}, {FineSense::DesiresWishes, 142},
      {FineSense::PlansGoals, 1077}, {FineSense::Knowledge, 1527},
      {FineSense::World, 1303},      {FineSense::Agent, 447}};
  for (const auto& [sense, n] : expected) {
    const std::size_t got = st.per_sense.at(sense);
    out.require(got == n, std::string(to_string(sense)) + " " + std::to_string(got) +
                              " != " + std::to_string(n));
  }
  try {
    const FoldSplit split = apply_manifest(data.corpus, data.manifest, 0);
    out.require(split.train.size() == 7919, "train " + std::to_string(split.train.size()));
    out.require(split.val.size() == 1975, "val " + std::to_string(split.val.size()));
    out.require(split.test.size() == 1096, "test " + std::to_string(split.test.size()));
    std::vector<std::size_t> train_val = split.train;
    train_val.insert(train_val.end(), split.val.begin(), split.val.end());
    const std::size_t tv = trigger_tokens(data.corpus, train_val);
    const std::size_t te = trigger_tokens(data.corpus, split.test);
    out.require(tv == 7160, "train+val triggers " + std::to_string(tv));
    out.require(te == 819, "test triggers " + std::to_string(te));
  } catch (const std::exception& e) {
    out.require(false, e.what());
  }
  seconds += t.seconds();
  out.require(seconds < 10, "runtime " + fixed2(seconds) + " s");
  return out;
}

Outcome baseline_scores() {
  Outcome out;
  GmeData data;
  double seconds = 0;
  if (!load_gme(out, data, seconds)) return out;
  Timer t;
  const auto result = run_baseline(data.corpus, data.manifest);
  seconds += t.seconds();
  const auto& rows = result["report"]["rows"];
  auto mean = [&](const char* gran, const char* mode) {
    return rows[gran][mode]["f1"]["mean"].get<double>();
  };
  auto label_mean = [&](const char* gran, const char* label) {
    const auto& per = rows[gran]["per_label"]["labeled"];
    return per.contains(label) ? per[label]["f1"]["mean"].get<double>() : 0.0;
  };
  auto near = [&](double got, double want, double tol, const std::string& what) {
    out.require(std::abs(got - want) <= tol,
                what + " " + fixed2(got) + " vs " + fixed2(want) + " +/-" + fixed2(tol));
  };
  near(mean("binary", "unlabeled"), 68.24, 3.0, "binary unlabeled F1");
  near(mean("coarse", "labeled"), 63.94, 3.0, "coarse labeled F1");
  near(mean("fine", "labeled"), 51.29, 3.0, "fine labeled F1");
  const std::vector<std::tuple<const char*, const char*, double>> labels = {
      {"coarse", "priority", 55.46}, {"coarse", "plausibility", 72.51},
      {"fine", "rules_norms", 50.94}, {"fine", "intentions", 39.11},
      {"fine", "knowledge", 50.95},  {"fine", "world", 52.58},
      {"fine", "agent", 67.39}};
  for (const auto& [gran, label, want] : labels) {
    near(label_mean(gran, label), want, 4.0, std::string(label) + " F1");
  }
  out.require(seconds < 60, "runtime " + fixed2(seconds) + " s");
  return out;
}

Outcome metric_oracle() {
  Outcome out;
  Timer t;
  testing::Gen g(2026);
  const Scheme scheme{SchemeKind::TriggerBiose, Granularity::FineConflated};
  std::vector<std::string> alphabet = {"O", "O", "O", "O"};
  for (const char* label : {"rules_norms", "intentions", "knowledge", "world", "agent"}) {
    for (const char* p : {"B-", "I-", "E-", "S-"}) alphabet.push_back(std::string(p) + label);
  }
  std::size_t mismatches = 0;
  for (int k = 0; k < 1000; ++k) {
    std::vector<TagSequence> gold, pred;
    std::vector<std::vector<std::string>> g_raw, p_raw;
    const std::size_t sentences = g.uniform(1, 8);
    for (std::size_t s = 0; s < sentences; ++s) {
      const std::size_t n = g.uniform(0, 20);
      std::vector<std::string> a(n), b(n);
      for (auto& x : a) x = g.pick(alphabet);
      // Predictions copy gold with noise so that scores spread over [0, 100].
      const double noise = static_cast<double>(g.uniform(0, 10)) / 10.0;
      for (std::size_t i = 0; i < n; ++i) b[i] = g.chance(noise) ? g.pick(alphabet) : a[i];
      g_raw.push_back(a);
      p_raw.push_back(b);
      gold.push_back(TagSequence{scheme, a});
      pred.push_back(TagSequence{scheme, b});
    }
    const auto m = score(gold, pred, EvalMode::Labeled);
    const auto ref = testing::conlleval::evaluate(g_raw, p_raw);
    const bool same = std::abs(100 * m.precision() - ref.precision()) < 0.005 &&
                      std::abs(100 * m.recall() - ref.recall()) < 0.005 &&
                      std::abs(100 * m.f1() - ref.f1()) < 0.005;
    if (!same) ++mismatches;
  }
  const double seconds = t.seconds();
  out.require(mismatches == 0, std::to_string(mismatches) + " of 1000 pairs differ");
  out.require(seconds < 30, "runtime " + fixed2(seconds) + " s");
  return out;
}

std::set<Annotation> expected_views(const std::vector<ModalInstance>& insts,
                                    const Scheme& scheme) {
  std::set<Annotation> out;
  for (const auto& inst : insts) {
    for (auto& a : view(inst, scheme)) out.insert(a);
  }
  return out;
}

Outcome codec_properties() {
  Outcome out;
  Timer t;
  testing::Gen g(4242);
  std::size_t round_trip_failures = 0, projection_failures = 0, ordering_failures = 0;
  for (int k = 0; k < 10000; ++k) {
    const Sentence s = testing::random_sentence(g, "d", k);
    const SchemeKind kind = kSchemeKinds[static_cast<std::size_t>(k) % kSchemeKinds.size()];
    const Granularity gran = kGranularities[g.uniform(0, kGranularities.size() - 1)];
    const Scheme scheme{kind, gran, true};

    const Encoding enc = encode(s, scheme);
    std::set<Annotation> got;
    bool ok = true;
    for (const TagSequence* seq : {&enc.primary}) {
      ok = ok && !check_well_formed(*seq);
      if (ok) for (auto& a : decode(*seq, s.size(), DecodeMode::Strict)) got.insert(a);
    }
    for (const auto& seq : enc.overflow) {
      ok = ok && !check_well_formed(seq);
      if (ok) for (auto& a : decode(seq, s.size(), DecodeMode::Strict)) got.insert(a);
    }
    std::vector<ModalInstance> kept;
    for (const auto& inst : s.instances) {
      if (std::find(enc.dropped.begin(), enc.dropped.end(), inst) == enc.dropped.end()) {
        kept.push_back(inst);
      }
    }
    if (!ok || got != expected_views(kept, scheme)) ++round_trip_failures;

    if (scheme.carries_sense()) {
      const auto full = encode_primary(s, Scheme{kind, Granularity::FineFull, true});
      std::vector<std::string> projected;
      for (const auto& tag : full.tags) projected.push_back(project(tag, gran));
      if (projected != enc.primary.tags) ++projection_failures;
    }

    const Sentence other = testing::random_sentence(g, "d", k);
    if (other.size() == s.size()) {
      const std::vector<TagSequence> gold{enc.primary};
      const std::vector<TagSequence> pred{encode_primary(other, scheme)};
      if (score(gold, pred, EvalMode::Unlabeled).f1() < score(gold, pred, EvalMode::Labeled).f1()) {
        ++ordering_failures;
      }
    }
  }
  // Arbitrary tag strings, well formed or not.
  const Scheme fine{SchemeKind::TriggerBiose, Granularity::FineConflated};
  std::vector<std::string> alphabet = {"O"};
  for (const char* label : {"rules_norms", "intentions", "knowledge"}) {
    for (const char* p : {"B-", "I-", "E-", "S-"}) alphabet.push_back(std::string(p) + label);
  }
  for (int k = 0; k < 10000; ++k) {
    const std::size_t n = g.uniform(0, 15);
    std::vector<std::string> a(n), b(n);
    for (auto& x : a) x = g.pick(alphabet);
    for (auto& x : b) x = g.pick(alphabet);
    const std::vector<TagSequence> gold{TagSequence{fine, a}}, pred{TagSequence{fine, b}};
    if (score(gold, pred, EvalMode::Unlabeled).f1() < score(gold, pred, EvalMode::Labeled).f1()) {
      ++ordering_failures;
    }
  }
  const double seconds = t.seconds();
  out.require(round_trip_failures == 0,
              std::to_string(round_trip_failures) + " round-trip failures");
  out.require(projection_failures == 0,
              std::to_string(projection_failures) + " projection failures");
  out.require(ordering_failures == 0,
              std::to_string(ordering_failures) + " pairs with unlabeled below labeled");
  out.require(seconds < 60, "runtime " + fixed2(seconds) + " s");
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int run_cli(const std::string& args, const fs::path& log) {
  const std::string cmd = std::string(MODALITY_CLI_PATH) + " " + args + " > " + log.string() +
                          " 2>&1";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

// Runs ingest, split and the baseline twice in separate processes and
// compares the metric JSON byte for byte.
Outcome determinism() {
  Outcome out;
  const fs::path root = fs::temp_directory_path() / ("modality_acceptance_" +
                                                     std::to_string(::getpid()));
  fs::remove_all(root);
  fs::create_directories(root);
  fs::path corpus = root / "corpus.conll";
  if (const char* gme = std::getenv("MODALITY_GME_CORPUS")) {
    corpus = gme;
    out.notes.push_back("GME corpus");
  } else {
    std::ofstream(corpus) << write_conll(testing::synthetic_corpus(7, 2000));
    out.notes.push_back("synthetic corpus of 2000 sentences");
  }
  std::vector<std::string> dumps;
  for (int run = 0; run < 2; ++run) {
    const fs::path dir = root / ("run" + std::to_string(run));
    const fs::path log = root / ("log" + std::to_string(run) + ".txt");
    const std::string q = "'" + dir.string() + "'";
    bool ok = run_cli("ingest '" + corpus.string() + "' --out " + q, log) == 0;
    ok = ok && run_cli("split " + q + "/corpus.conll --seed 13 --out " + q, log) == 0;
    ok = ok && run_cli("baseline run " + q + "/corpus.conll --manifest " + q +
                           "/manifest.json --out " + q,
                       log) == 0;
    out.require(ok, "run " + std::to_string(run) + " failed: " + slurp(log));
    if (!ok) break;
    dumps.push_back(slurp(dir / "baseline.json"));
  }
  if (dumps.size() == 2) {
    out.require(!dumps[0].empty(), "empty baseline.json");
    out.require(dumps[0] == dumps[1], "baseline.json differs between runs");
  }
  fs::remove_all(root);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  int criterion = 0;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--criterion") criterion = std::atoi(argv[i + 1]);
  }
  const char* names[] = {"", "corpus statistics", "majority baseline scores",
                         "metric oracle equivalence", "codec properties", "determinism"};
  Outcome out;
  switch (criterion) {
    case 1: out = corpus_stats(); break;
    case 2: out = baseline_scores(); break;
    case 3: out = metric_oracle(); break;
    case 4: out = codec_properties(); break;
    case 5: out = determinism(); break;
    default:
      std::cerr << "usage: acceptance --criterion 1..5\n";
      return 2;
  }
  std::cout << (out.pass ? "PASS" : "FAIL") << " c" << criterion << " " << names[criterion];
  if (!out.notes.empty()) {
    std::cout << ":";
    for (std::size_t i = 0; i < out.notes.size(); ++i) {
      std::cout << (i ? "; " : " ") << out.notes[i];
    }
  }
  std::cout << "\n";
  return out.pass ? 0 : 1;
}
