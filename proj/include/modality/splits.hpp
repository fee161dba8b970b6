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

// Sentence-level train/validation/test splits.
//
// make_splits() shuffles sentence ids with std::mt19937_64 seeded by the
// split seed, using a Fisher-Yates shuffle whose bounded draws are made by
// rejection sampling on the raw 64-bit outputs. Both the engine and the
// shuffle are fully specified, so a seed gives the same manifest on every
// platform (std::shuffle and the std distributions are not portable).
//
// The first round(0.1 N) shuffled sentences form the test set. Each of the
// five folds then reshuffles the remaining M sentences, in sequence on the
// same engine, and takes the first round(0.2 M) as its validation set; the
// rest of train+val is that fold's training set.

#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "modality/corpus.hpp"
#include "modality/error.hpp"

namespace modality {

inline constexpr std::size_t kFolds = 5;
inline constexpr double kTestFraction = 0.1;
inline constexpr double kValidationFraction = 0.2;
inline constexpr std::size_t kMinSplitCorpus = 10;

struct SplitManifest {
  std::uint64_t seed = 0;
  std::vector<SentenceId> test;
  std::vector<std::vector<SentenceId>> folds;  // validation ids per fold
  // Sentences left out of every partition; absent from generated manifests.
  std::vector<SentenceId> excluded;

  bool operator==(const SplitManifest&) const = default;
};

class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

inline std::size_t round_half_up(double x) {
  return static_cast<std::size_t>(std::floor(x + 0.5));
}

inline SplitManifest make_splits(const Corpus& corpus, std::uint64_t seed) {
  if (corpus.size() < kMinSplitCorpus) {
    throw InputError("corpus has " + std::to_string(corpus.size()) +
                     " sentences; splitting needs at least " + std::to_string(kMinSplitCorpus));
  }
  std::vector<SentenceId> ids;
  ids.reserve(corpus.size());
  for (const auto& s : corpus) ids.push_back(s.id());

  SplitRng rng(seed);
  rng.shuffle(ids);
  const std::size_t n_test = round_half_up(kTestFraction * static_cast<double>(ids.size()));

  SplitManifest m;
  m.seed = seed;
  m.test.assign(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(n_test));
  std::vector<SentenceId> rest(ids.begin() + static_cast<std::ptrdiff_t>(n_test), ids.end());
  const std::size_t n_val = round_half_up(kValidationFraction * static_cast<double>(rest.size()));
  for (std::size_t k = 0; k < kFolds; ++k) {
    rng.shuffle(rest);
    m.folds.emplace_back(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(n_val));
  }
  return m;
}

// Indices into a corpus for one fold.
struct FoldSplit {
  std::vector<std::size_t> train;
  std::vector<std::size_t> val;
  std::vector<std::size_t> test;
};

// Resolves manifest ids against a corpus. Throws InputError naming the first
// id that is absent from the corpus or listed twice.
inline FoldSplit apply_manifest(const Corpus& corpus, const SplitManifest& m, std::size_t fold) {
  if (fold >= m.folds.size()) {
    throw InputError("manifest has " + std::to_string(m.folds.size()) + " folds; fold " +
                     std::to_string(fold) + " requested");
  }
  std::map<SentenceId, std::size_t> index;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (!index.emplace(corpus[i].id(), i).second) {
      throw InputError("corpus repeats sentence id " + corpus[i].doc_id + "#" +
                       std::to_string(corpus[i].sent_id));
    }
  }
  auto name = [](const SentenceId& id) { return id.first + "#" + std::to_string(id.second); };
  std::vector<char> taken(corpus.size(), 0);
  auto resolve = [&](const std::vector<SentenceId>& ids, std::vector<std::size_t>* out) {
    for (const auto& id : ids) {
      auto it = index.find(id);
      if (it == index.end()) throw InputError("manifest id " + name(id) + " is not in the corpus");
      if (taken[it->second]) throw InputError("manifest lists " + name(id) + " more than once");
      taken[it->second] = 1;
      if (out) out->push_back(it->second);
    }
  };
  FoldSplit split;
  resolve(m.test, &split.test);
  resolve(m.folds[fold], &split.val);
  resolve(m.excluded, nullptr);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (!taken[i]) split.train.push_back(i);
  }
  return split;
}

// Checks that no id repeats across the test set and any one fold, and that
// every id exists in the corpus.
inline void check_manifest(const Corpus& corpus, const SplitManifest& m) {
  for (std::size_t k = 0; k < m.folds.size(); ++k) apply_manifest(corpus, m, k);
}

inline nlohmann::ordered_json to_json(const SplitManifest& m) {
  auto ids = [](const std::vector<SentenceId>& v) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& [doc, sent] : v) a.push_back({doc, sent});
    return a;
  };
  nlohmann::ordered_json j;
  j["seed"] = m.seed;
  j["test"] = ids(m.test);
  nlohmann::ordered_json folds = nlohmann::ordered_json::array();
  for (const auto& f : m.folds) folds.push_back(ids(f));
  j["folds"] = folds;
  if (!m.excluded.empty()) j["excluded"] = ids(m.excluded);
  return j;
}

inline SplitManifest manifest_from_json(const nlohmann::json& j) {
  auto ids = [](const nlohmann::json& a, const char* what) {
    if (!a.is_array()) throw InputError(std::string("manifest field '") + what + "' is not a list");
    std::vector<SentenceId> out;
    std::set<SentenceId> seen;
    for (const auto& e : a) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_number_integer()) {
        throw InputError(std::string("manifest field '") + what +
                         "' holds an entry that is not [doc, sent]");
      }
      SentenceId id{e[0].get<std::string>(), e[1].get<std::int64_t>()};
      if (!seen.insert(id).second) {
        throw InputError("manifest lists " + id.first + "#" + std::to_string(id.second) +
                         " more than once in '" + what + "'");
      }
      out.push_back(std::move(id));
    }
    return out;
  };
  if (!j.is_object() || !j.contains("test") || !j.contains("folds")) {
    throw InputError("manifest needs 'test' and 'folds'");
  }
  SplitManifest m;
  if (j.contains("seed")) m.seed = j.at("seed").get<std::uint64_t>();
  m.test = ids(j.at("test"), "test");
  if (!j.at("folds").is_array()) throw InputError("manifest field 'folds' is not a list");
  for (const auto& f : j.at("folds")) m.folds.push_back(ids(f, "folds"));
  if (j.contains("excluded")) m.excluded = ids(j.at("excluded"), "excluded");
  return m;
}

inline void save_manifest(const std::string& path, const SplitManifest& m) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write manifest " + path);
  out << to_json(m).dump(1) << '\n';
}

inline SplitManifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read manifest " + path);
  try {
    return manifest_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw InputError("manifest " + path + ": " + e.what());
  }
}

}  // namespace modality
