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

#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "support/fixtures.hpp"
#include "support/synthetic.hpp"
#include "modality/conll.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int status = -1;
  std::string err;
};

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("modality_cli_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Result run(const std::string& args, const fs::path& dir) {
  const fs::path err = dir / "stderr.txt";
  const std::string cmd = std::string(MODALITY_CLI_PATH) + " " + args + " > " +
                          (dir / "stdout.txt").string() + " 2> " + err.string();
  const int raw = std::system(cmd.c_str());
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(err)};
}

fs::path write_corpus(const fs::path& dir, std::size_t n) {
  const fs::path p = dir / "corpus.conll";
  std::ofstream(p) << modality::write_conll(modality::testing::synthetic_corpus(21, n));
  return p;
}

}  // namespace

TEST_CASE("ingest normalizes and is idempotent") {
  const fs::path dir = scratch("ingest");
  const fs::path corpus = write_corpus(dir, 40);
  REQUIRE(run("ingest " + corpus.string() + " --out " + (dir / "a").string(), dir).status == 0);
  REQUIRE(run("ingest " + (dir / "a" / "corpus.conll").string() + " --out " + (dir / "b").string(),
              dir).status == 0);
  CHECK(slurp(dir / "a" / "corpus.conll") == slurp(dir / "b" / "corpus.conll"));
  CHECK(slurp(dir / "a" / "corpus.conll") == slurp(corpus));
  const auto stats = nlohmann::json::parse(slurp(dir / "a" / "stats.json"));
  CHECK(stats["n_sentences"] == 40);
}

TEST_CASE("malformed rows exit with status 2 and a line number") {
  const fs::path dir = scratch("malformed");
  std::ofstream(dir / "bad.conll") << "# doc_id = x\n0\tword\tword\tX\t-1\tROOT\tO\tO\n";
  const Result r = run("ingest " + (dir / "bad.conll").string() + " --out " + dir.string(), dir);
  CHECK(r.status == 2);
  CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("configuration errors exit with status 3") {
  const fs::path dir = scratch("config");
  const fs::path corpus = write_corpus(dir, 20);
  CHECK(run("ingest " + (dir / "absent.conll").string() + " --out " + dir.string(), dir).status == 3);
  CHECK(run("encode " + corpus.string() + " --scheme bio --out " + dir.string(), dir).status == 3);
  CHECK(run("split " + corpus.string() + " --out " + dir.string(), dir).status == 3);
  CHECK(run("frobnicate", dir).status == 3);
}

TEST_CASE("scoring gold against itself gives 100") {
  const fs::path dir = scratch("score");
  const fs::path corpus = write_corpus(dir, 30);
  for (const char* scheme : {"trigger_biose:fine", "trigger_biose_with_head:coarse",
                             "event_span_bio", "joint_event_trigger:binary"}) {
    INFO(scheme);
    REQUIRE(run("encode " + corpus.string() + " --scheme " + scheme + " --out " +
                    (dir / "enc").string(), dir).status == 0);
    REQUIRE(run("score --gold " + corpus.string() + " --pred " +
                    (dir / "enc" / "encoded.conll").string() + " --scheme " + scheme +
                    " --out " + (dir / "sc").string(), dir).status == 0);
    const auto m = nlohmann::json::parse(slurp(dir / "sc" / "metrics.json"));
    for (const auto& [gran, modes] : m["rows"].items()) {
      for (const auto& [mode, metrics] : modes.items()) {
        CHECK(metrics["precision"] == 100.0);
        CHECK(metrics["recall"] == 100.0);
        CHECK(metrics["f1"] == 100.0);
      }
    }
  }
}

TEST_CASE("scheme mismatch between gold and predictions") {
  const fs::path dir = scratch("mismatch");
  const fs::path corpus = write_corpus(dir, 20);
  REQUIRE(run("encode " + corpus.string() + " --scheme event_span_bio --out " + dir.string(), dir)
              .status == 0);
  CHECK(run("score --gold " + corpus.string() + " --pred " + (dir / "encoded.conll").string() +
                " --scheme trigger_biose --out " + dir.string(), dir).status == 3);
}

TEST_CASE("baseline pipeline through the command line") {
  const fs::path dir = scratch("baseline");
  const fs::path corpus = write_corpus(dir, 120);
  const std::string c = corpus.string();
  REQUIRE(run("split " + c + " --seed 5 --out " + dir.string(), dir).status == 0);
  const std::string manifest = (dir / "manifest.json").string();
  REQUIRE(run("baseline train " + c + " --manifest " + manifest + " --fold 1 --scheme "
              "trigger_biose:coarse --out " + dir.string(), dir).status == 0);
  REQUIRE(run("baseline tag " + c + " --lexicon " + (dir / "lexicon.tsv").string() +
              " --manifest " + manifest + " --fold 1 --out " + dir.string(), dir).status == 0);
  REQUIRE(run("score --gold " + c + " --pred " + (dir / "predictions.conll").string() +
              " --scheme trigger_biose:coarse --fold 1 --out " + dir.string(), dir).status == 0);
  const auto m = nlohmann::json::parse(slurp(dir / "metrics.json"));
  CHECK(m["sentences"] == 12);
  CHECK(m["rows"]["coarse"]["labeled"]["f1"].get<double>() > 0.0);

  REQUIRE(run("baseline run " + c + " --manifest " + manifest + " --out " + (dir / "r1").string(),
              dir).status == 0);
  REQUIRE(run("baseline run " + c + " --manifest " + manifest + " --out " + (dir / "r2").string(),
              dir).status == 0);
  CHECK(slurp(dir / "r1" / "baseline.json") == slurp(dir / "r2" / "baseline.json"));

  // The fold-1 coarse row of the run equals the step-by-step score.
  const auto run_json = nlohmann::json::parse(slurp(dir / "r1" / "baseline.json"));
  CHECK(run_json["fold_records"][1]["rows"]["coarse"]["labeled"]["f1"] ==
        m["rows"]["coarse"]["labeled"]["f1"]);
}

TEST_CASE("report over identical folds") {
  const fs::path dir = scratch("report");
  nlohmann::ordered_json metrics = {{"precision", 40.0}, {"recall", 60.0}, {"f1", 48.0},
                                    {"micro_f1", 48.0}, {"macro_f1", 45.0}};
  std::string files;
  for (int k = 0; k < 5; ++k) {
    nlohmann::ordered_json rec;
    rec["fold"] = k;
    rec["rows"]["fine"]["labeled"] = metrics;
    const fs::path p = dir / ("fold" + std::to_string(k) + ".json");
    std::ofstream(p) << rec.dump();
    files += " " + p.string();
  }
  REQUIRE(run("report" + files + " --out " + (dir / "out").string(), dir).status == 0);
  const auto report = nlohmann::json::parse(slurp(dir / "out" / "report.json"));
  for (const char* f : {"precision", "recall", "f1", "micro_f1", "macro_f1"}) {
    CHECK(report["rows"]["fine"]["labeled"][f]["mean"] == metrics[f]);
    CHECK(report["rows"]["fine"]["labeled"][f]["std"] == 0.0);
  }
  CHECK(slurp(dir / "out" / "report.txt").find("48.00") != std::string::npos);
}

TEST_CASE("options from a config file") {
  const fs::path dir = scratch("config_file");
  const fs::path corpus = write_corpus(dir, 20);
  std::ofstream(dir / "run.toml") << "[encode]\nscheme = \"event_head\"\nout = \""
                                  << (dir / "cfg").string() << "\"\n";
  REQUIRE(run("--config " + (dir / "run.toml").string() + " encode " + corpus.string(), dir)
              .status == 0);
  CHECK(slurp(dir / "cfg" / "encoded.conll").rfind("# scheme = event_head\n", 0) == 0);
}
