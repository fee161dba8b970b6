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

// Command-line driver.
//
//   modality ingest CORPUS --out DIR
//   modality stats CORPUS [--out DIR]
//   modality split CORPUS --seed N --out DIR
//   modality encode CORPUS --scheme S --out DIR
//   modality baseline train CORPUS (--manifest M | --seed N) [--fold K] --out DIR
//   modality baseline tag CORPUS --lexicon L [--manifest M --fold K --part P] --out DIR
//   modality baseline run CORPUS (--manifest M | --seed N) --out DIR
//   modality score --gold CORPUS --pred FILE --scheme S --out DIR
//   modality report RECORD... --out DIR
//
// Exit status: 0 on success, 2 for malformed input data, 3 for bad
// configuration (flags, config file, missing paths).

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "modality/modality.hpp"

namespace fs = std::filesystem;
using namespace modality;

namespace {

constexpr int kInputFailure = 2;
constexpr int kConfigFailure = 3;

void require_file(const std::string& path, const char* what) {
  if (!fs::is_regular_file(path)) {
    throw ConfigError(std::string(what) + " '" + path + "' does not exist");
  }
}

fs::path out_dir(const std::string& dir) {
  if (dir.empty()) throw ConfigError("--out is required");
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create output directory '" + dir + "': " + ec.message());
  return fs::path(dir);
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path.string() + "'");
  return out;
}

template <typename Json>
void write_json(const fs::path& path, const Json& j) {
  auto out = open_out(path);
  out << j.dump(2) << '\n';
}

Corpus load_corpus(const std::string& path) {
  require_file(path, "corpus");
  std::ifstream in(path, std::ios::binary);
  std::vector<std::string> warnings;
  Corpus corpus = parse_conll(in, &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
  return corpus;
}

SplitManifest manifest_or_seed(const Corpus& corpus, const std::string& manifest,
                               std::optional<std::uint64_t> seed) {
  if (!manifest.empty()) {
    require_file(manifest, "manifest");
    SplitManifest m = load_manifest(manifest);
    check_manifest(corpus, m);
    return m;
  }
  if (!seed) throw ConfigError("either --manifest or --seed is required");
  return make_splits(corpus, *seed);
}

LexiconKey parse_key(const std::string& s) {
  if (s == "form") return LexiconKey::Form;
  if (s == "lemma") return LexiconKey::Lemma;
  throw ConfigError("unknown lexicon key '" + s + "'");
}

Granularity parse_gran(const std::string& s) {
  auto g = parse_granularity(s);
  if (!g) throw ConfigError("unknown granularity '" + s + "'");
  return *g;
}

std::vector<std::size_t> part_of(const FoldSplit& split, const std::string& part) {
  if (part == "train") return split.train;
  if (part == "val") return split.val;
  if (part == "test") return split.test;
  throw ConfigError("unknown split part '" + part + "' (train, val or test)");
}

// Tag files start with the scheme they were written under.
void write_scheme_header(std::ostream& out, const Scheme& scheme) {
  out << "# scheme = " << to_string(scheme) << '\n';
}

std::optional<Scheme> read_scheme_header(const std::string& path) {
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] != '#') break;
    if (auto v = conll_detail::comment_value(line, "scheme")) return parse_scheme(*v);
  }
  return std::nullopt;
}

// Tags outside the scheme's alphabet mean the predictions were produced for
// another scheme; transition errors are left to tolerant decoding.
bool in_alphabet(const std::string& tag, const Scheme& scheme) {
  auto t = parse_tag(tag);
  if (!t) return false;
  if (t->role == TagRole::Outside) return true;
  if (scheme.is_trigger_biose()) {
    if (t->role == TagRole::Head) return scheme.has_heads();
    return t->role == TagRole::Trigger && is_label_at(t->label, scheme.granularity);
  }
  switch (scheme.kind) {
    case SchemeKind::EventHead: return t->role == TagRole::Head;
    case SchemeKind::EventSpanBio: return t->role == TagRole::Event;
    default:
      if (t->role == TagRole::Event) return true;
      if (t->role != TagRole::JointTrigger) return false;
      return scheme.with_sense ? is_label_at(t->label, scheme.granularity) : t->label.empty();
  }
}

std::vector<std::string> project_tags(const std::vector<std::string>& tags, Granularity g) {
  std::vector<std::string> out;
  out.reserve(tags.size());
  for (const auto& t : tags) out.push_back(project(t, g));
  return out;
}

// ---------------------------------------------------------------------------

struct Options {
  std::string corpus;
  std::string out;
  std::string scheme = "trigger_biose:fine";
  std::string manifest;
  std::optional<std::uint64_t> seed;
  std::size_t fold = 0;
  std::string part = "test";
  std::string key = "form";
  std::string lexicon;
  std::string gold;
  std::string pred;
  std::string mode = "labeled";
  std::string granularity;
  std::vector<std::string> records;
};

int cmd_ingest(const Options& o) {
  const Corpus corpus = load_corpus(o.corpus);
  const fs::path dir = out_dir(o.out);
  {
    auto out = open_out(dir / "corpus.conll");
    write_conll(out, corpus);
  }
  write_json(dir / "stats.json", to_json(compute_stats(corpus)));
  std::cout << "ingested " << corpus.size() << " sentences into " << dir.string() << '\n';
  return 0;
}

int cmd_stats(const Options& o) {
  const auto j = to_json(compute_stats(load_corpus(o.corpus)));
  if (!o.out.empty()) write_json(out_dir(o.out) / "stats.json", j);
  std::cout << j.dump(2) << '\n';
  return 0;
}

int cmd_split(const Options& o) {
  if (!o.seed) throw ConfigError("--seed is required");
  const Corpus corpus = load_corpus(o.corpus);
  const SplitManifest m = make_splits(corpus, *o.seed);
  const fs::path dir = out_dir(o.out);
  save_manifest((dir / "manifest.json").string(), m);
  const FoldSplit f = apply_manifest(corpus, m, 0);
  std::cout << "train " << f.train.size() << " / val " << f.val.size() << " / test "
            << f.test.size() << " sentences per fold\n";
  return 0;
}

int cmd_encode(const Options& o) {
  const Scheme scheme = parse_scheme(o.scheme);
  const Corpus corpus = load_corpus(o.corpus);
  const fs::path dir = out_dir(o.out);
  auto out = open_out(dir / "encoded.conll");
  write_scheme_header(out, scheme);
  const std::string* last_doc = nullptr;
  std::size_t overflow = 0, dropped = 0;
  for (const auto& s : corpus) {
    const Encoding enc = encode(s, scheme);
    for (const auto& w : enc.warnings) std::cerr << "warning: " << w << '\n';
    write_tagged(out, s, enc.primary.tags, column_for(scheme), last_doc);
    for (std::size_t k = 0; k < enc.overflow.size(); ++k) {
      write_tagged(out, s, enc.overflow[k].tags, column_for(scheme), last_doc,
                   static_cast<int>(k + 1));
    }
    overflow += enc.overflow.size();
    dropped += enc.dropped.size();
  }
  std::cout << "encoded " << corpus.size() << " sentences as " << to_string(scheme) << " ("
            << overflow << " overflow sequences, " << dropped << " instances dropped)\n";
  return 0;
}

int cmd_baseline_train(const Options& o) {
  const Scheme scheme = parse_scheme(o.scheme);
  if (scheme.kind != SchemeKind::TriggerBiose) {
    throw ConfigError("the majority baseline tags trigger_biose only");
  }
  const Corpus corpus = load_corpus(o.corpus);
  const SplitManifest m = manifest_or_seed(corpus, o.manifest, o.seed);
  const FoldSplit split = apply_manifest(corpus, m, o.fold);
  const auto lex = train_majority(corpus, split.train, scheme, parse_key(o.key));
  const fs::path dir = out_dir(o.out);
  auto out = open_out(dir / "lexicon.tsv");
  write_lexicon(out, lex);
  std::cout << "lexicon of " << lex.size() << " keys from " << split.train.size()
            << " training sentences\n";
  return 0;
}

int cmd_baseline_tag(const Options& o) {
  require_file(o.lexicon, "lexicon");
  std::ifstream lin(o.lexicon);
  const MajorityLexicon lex = read_lexicon(lin);
  const Corpus corpus = load_corpus(o.corpus);
  std::vector<std::size_t> which;
  if (!o.manifest.empty() || o.seed) {
    const SplitManifest m = manifest_or_seed(corpus, o.manifest, o.seed);
    which = part_of(apply_manifest(corpus, m, o.fold), o.part);
    std::sort(which.begin(), which.end());
  } else {
    for (std::size_t i = 0; i < corpus.size(); ++i) which.push_back(i);
  }
  const fs::path dir = out_dir(o.out);
  auto out = open_out(dir / "predictions.conll");
  write_scheme_header(out, lex.scheme());
  const std::string* last_doc = nullptr;
  for (auto i : which) {
    write_tagged(out, corpus[i], tag_majority(lex, corpus[i]).tags, column_for(lex.scheme()),
                 last_doc);
  }
  std::cout << "tagged " << which.size() << " sentences\n";
  return 0;
}

int cmd_baseline_run(const Options& o) {
  const Corpus corpus = load_corpus(o.corpus);
  const SplitManifest m = manifest_or_seed(corpus, o.manifest, o.seed);
  BaselineOptions opt;
  opt.key = parse_key(o.key);
  const auto result = run_baseline(corpus, m, opt);
  const fs::path dir = out_dir(o.out);
  write_json(dir / "baseline.json", result);
  const std::string table = format_table(result["report"]);
  open_out(dir / "baseline.txt") << table;
  std::cout << table;
  return 0;
}

int cmd_score(const Options& o) {
  const Scheme scheme = parse_scheme(o.scheme);
  require_file(o.pred, "predictions");
  if (auto declared = read_scheme_header(o.pred); declared && !(*declared == scheme)) {
    throw ConfigError("predictions were written as " + to_string(*declared) + ", not " +
                      to_string(scheme));
  }
  const auto mode = parse_eval_mode(o.mode);
  if (!mode) throw ConfigError("unknown mode '" + o.mode + "'");
  std::optional<Granularity> target;
  if (!o.granularity.empty()) {
    target = parse_gran(o.granularity);
    if (!scheme.carries_sense()) throw ConfigError(to_string(scheme) + " carries no senses");
    if (*target > scheme.granularity) {
      throw ConfigError("cannot score " + to_string(scheme) + " at the finer granularity " +
                        o.granularity);
    }
  }

  const Corpus gold_corpus = load_corpus(o.gold);
  std::map<SentenceId, std::size_t> index;
  for (std::size_t i = 0; i < gold_corpus.size(); ++i) index.emplace(gold_corpus[i].id(), i);

  std::ifstream pin(o.pred, std::ios::binary);
  const auto predicted = read_tagged(pin);
  std::vector<TagSequence> gold, pred;
  std::vector<Sentence> sentences;
  const TagColumn col = column_for(scheme);
  Scheme scored = scheme;
  if (target) scored.granularity = *target;
  for (const auto& p : predicted) {
    if (p.overflow > 0) continue;
    auto it = index.find(p.id);
    if (it == index.end()) {
      throw InputError("predicted sentence " + p.id.first + "#" + std::to_string(p.id.second) +
                       " is not in the gold corpus");
    }
    const Sentence& s = gold_corpus[it->second];
    const auto& tags = column(p, col);
    if (tags.size() != s.tokens.size()) {
      throw InputError("predicted sentence " + p.id.first + "#" + std::to_string(p.id.second) +
                       " has " + std::to_string(tags.size()) + " tokens, gold " +
                       std::to_string(s.tokens.size()));
    }
    for (const auto& t : tags) {
      if (!in_alphabet(t, scheme)) {
        throw ConfigError("predicted tag '" + t + "' in " + p.id.first + "#" +
                          std::to_string(p.id.second) + " is not a " + to_string(scheme) +
                          " tag");
      }
    }
    TagSequence ps{scheme, tags};
    if (target) ps.tags = project_tags(ps.tags, *target);
    ps.scheme = scored;
    pred.push_back(repair(ps));
    gold.push_back(encode_primary(s, scored));
    sentences.push_back(s);
  }

  const auto both = score_both(gold, pred);
  nlohmann::ordered_json record;
  record["fold"] = o.fold;
  record["scheme"] = to_string(scored);
  record["sentences"] = gold.size();
  record["rows"][std::string(to_string(scored.granularity))] = {
      {"labeled", to_json(both.labeled)}, {"unlabeled", to_json(both.unlabeled)}};
  nlohmann::ordered_json pos = nlohmann::ordered_json::object();
  if (scored.is_trigger_biose() || scored.kind == SchemeKind::JointEventTrigger) {
    for (const auto& [cls, s] : breakdown_by_pos(gold, pred, sentences)) pos[cls] = to_json(s);
  }
  record["per_pos"] = pos;

  const fs::path dir = out_dir(o.out);
  write_json(dir / "metrics.json", record);
  const std::string text =
      format_report(*mode == EvalMode::Labeled ? both.labeled : both.unlabeled);
  open_out(dir / "metrics.txt") << text;
  std::cout << text;
  return 0;
}

int cmd_report(const Options& o) {
  if (o.records.empty()) throw ConfigError("no fold records given");
  std::vector<nlohmann::ordered_json> records;
  for (const auto& path : o.records) {
    require_file(path, "fold record");
    std::ifstream in(path);
    try {
      auto j = nlohmann::ordered_json::parse(in);
      // A baseline result file holds its own fold records.
      if (j.contains("fold_records")) {
        for (auto& r : j["fold_records"]) records.push_back(r);
      } else {
        records.push_back(std::move(j));
      }
    } catch (const nlohmann::json::exception& e) {
      throw InputError(path + ": " + e.what());
    }
  }
  const auto report = aggregate_folds(records);
  const fs::path dir = out_dir(o.out);
  write_json(dir / "report.json", report);
  const std::string table = format_table(report);
  open_out(dir / "report.txt") << table;
  std::cout << table;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Corpus toolkit and evaluation harness for event-based modality"};
  app.set_config("--config", "", "read options from a TOML-style file");
  app.require_subcommand(1);
  Options o;

  auto add_out = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--out", o.out, "output directory");
    if (required) opt->required();
  };
  auto add_split = [&](CLI::App* c) {
    c->add_option("--manifest", o.manifest, "split manifest (JSON)");
    c->add_option("--seed", o.seed, "split seed when no manifest is given");
    c->add_option("--fold", o.fold, "fold index")->capture_default_str();
  };

  auto* ingest = app.add_subcommand("ingest", "validate a corpus, write it normalized with stats");
  ingest->add_option("corpus", o.corpus)->required();
  add_out(ingest, true);

  auto* stats = app.add_subcommand("stats", "corpus statistics as JSON");
  stats->add_option("corpus", o.corpus)->required();
  add_out(stats, false);

  auto* split = app.add_subcommand("split", "make a train/val/test manifest");
  split->add_option("corpus", o.corpus)->required();
  split->add_option("--seed", o.seed, "split seed")->required();
  add_out(split, true);

  auto* enc = app.add_subcommand("encode", "write the corpus as tag sequences");
  enc->add_option("corpus", o.corpus)->required();
  enc->add_option("--scheme", o.scheme, "scheme[:granularity][:nosense]")->capture_default_str();
  add_out(enc, true);

  auto* baseline = app.add_subcommand("baseline", "majority-vote trigger tagger");
  baseline->require_subcommand(1);
  auto* train = baseline->add_subcommand("train", "count tags on a fold's training part");
  train->add_option("corpus", o.corpus)->required();
  train->add_option("--scheme", o.scheme)->capture_default_str();
  train->add_option("--key", o.key, "form or lemma")->capture_default_str();
  add_split(train);
  add_out(train, true);
  auto* tag = baseline->add_subcommand("tag", "tag sentences with a lexicon");
  tag->add_option("corpus", o.corpus)->required();
  tag->add_option("--lexicon", o.lexicon)->required();
  tag->add_option("--part", o.part, "train, val or test")->capture_default_str();
  add_split(tag);
  add_out(tag, true);
  auto* run = baseline->add_subcommand("run", "train and score every fold at every granularity");
  run->add_option("corpus", o.corpus)->required();
  run->add_option("--key", o.key, "form or lemma")->capture_default_str();
  add_split(run);
  add_out(run, true);

  auto* sc = app.add_subcommand("score", "chunk P/R/F1 of predictions against gold");
  sc->add_option("--gold", o.gold, "gold corpus")->required();
  sc->add_option("--pred", o.pred, "predicted tag file")->required();
  sc->add_option("--scheme", o.scheme)->capture_default_str();
  sc->add_option("--mode", o.mode, "labeled or unlabeled (text report)")->capture_default_str();
  sc->add_option("--granularity", o.granularity, "project both sides to binary|coarse|fine");
  sc->add_option("--fold", o.fold, "fold index recorded in the output")->capture_default_str();
  add_out(sc, true);

  auto* rep = app.add_subcommand("report", "mean and std over fold records");
  rep->add_option("records", o.records, "metrics.json or baseline.json files")->required();
  add_out(rep, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigFailure;
  }

  try {
    if (*ingest) return cmd_ingest(o);
    if (*stats) return cmd_stats(o);
    if (*split) return cmd_split(o);
    if (*enc) return cmd_encode(o);
    if (*train) return cmd_baseline_train(o);
    if (*tag) return cmd_baseline_tag(o);
    if (*run) return cmd_baseline_run(o);
    if (*sc) return cmd_score(o);
    if (*rep) return cmd_report(o);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigFailure;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputFailure;
  }
  return kConfigFailure;
}
