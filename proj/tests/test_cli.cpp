// Copyright 2026 The seqclus Authors.
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

const std::string kCli = SEQCLUS_CLI_PATH;
const std::string kData = SEQCLUS_DATA_DIR;

struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() / ("seqclus_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Scratch() {
    std::error_code ec;
    fs::remove_all(dir, ec);
  }
  std::string operator/(const std::string& name) const { return (dir / name).string(); }
};

int run(const std::string& args, const std::string& err_file = "") {
  std::string cmd = kCli + " " + args + " > /dev/null";
  cmd += err_file.empty() ? " 2>/dev/null" : " 2>" + err_file;
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("cluster writes assignment, newick, scores and manifests") {
  Scratch s;
  const auto in = kData + "/toy.fasta";
  REQUIRE(run("cluster --input " + in + " --k-range 2:6 --index asw --out " + (s / "a.csv") +
              " --newick " + (s / "t.nwk") + " --scores-out " + (s / "s.tsv") + " --threads 2") == 0);
  const auto assign = slurp(s / "a.csv");
  CHECK(assign.rfind("seq_id,cluster\n", 0) == 0);
  CHECK(std::count(assign.begin(), assign.end(), '\n') == 13);
  CHECK(slurp(s / "t.nwk").back() == '\n');
  CHECK(slurp(s / "s.tsv").rfind("k\tindex\tscore\tvalid\n", 0) == 0);
  const auto manifest = nlohmann::json::parse(slurp(s / "a.csv.manifest.json"));
  CHECK(manifest["tool"] == "seqclus");
  CHECK(manifest["seed"] == 42);
  CHECK(manifest["config_hash"].get<std::string>().size() == 16);
  CHECK(manifest.contains("timestamp"));
}

TEST_CASE("identical configs give identical artifacts and config hashes") {
  Scratch s;
  const auto in = kData + "/toy_labeled.csv";
  const std::string common = "encode --input " + in + " --id-column --label-column --t 5 ";
  REQUIRE(run(common + "--seed 3 --out " + (s / "e1.tsv") + " --threads 1") == 0);
  REQUIRE(run(common + "--seed 3 --out " + (s / "e2.tsv") + " --threads 3") == 0);
  CHECK(slurp(s / "e1.tsv") == slurp(s / "e2.tsv"));
  const auto m1 = nlohmann::json::parse(slurp(s / "e1.tsv.manifest.json"));
  const auto m2 = nlohmann::json::parse(slurp(s / "e2.tsv.manifest.json"));
  CHECK(m1["config_hash"] == m2["config_hash"]);
  REQUIRE(run(common + "--out " + (s / "e3.tsv") + " --seed 4") == 0);
  CHECK(slurp(s / "e1.tsv") != slurp(s / "e3.tsv"));
}

TEST_CASE("encode options: dense output, saved model, segment dump, k-mers") {
  Scratch s;
  const auto in = kData + "/sessions.txt";
  REQUIRE(run("encode --input " + in + " --n 3 --dense --out " + (s / "d.tsv") + " --save-model " +
              (s / "m.json") + " --dump-segments " + (s / "seg.tsv")) == 0);
  CHECK(slurp(s / "d.tsv").rfind("seq_id\t0\t", 0) == 0);
  const auto model = nlohmann::json::parse(slurp(s / "m.json"));
  CHECK(model["trees"].size() == 10);
  CHECK(slurp(s / "seg.tsv").rfind("f1\tf2\tf3\ty_target\tseq_id\n", 0) == 0);
  REQUIRE(run("encode --input " + in + " --method kmer --n 2 --dense --out " + (s / "k.tsv")) == 0);
  CHECK(slurp(s / "k.tsv").find("cart") != std::string::npos);
}

TEST_CASE("evaluate prints a table row") {
  Scratch s;
  const auto in = kData + "/toy_labeled.csv";
  REQUIRE(run("evaluate --input " + in + " --id-column --label-column --method kmer --k 3 --out " +
              (s / "r.json")) == 0);
  const auto r = nlohmann::json::parse(slurp(s / "r.json"));
  CHECK(r["method"] == "kmer-k3");
  for (const char* key : {"Purity", "RI", "ARI", "F-meas", "ASW", "CH", "Dunn", "1NN"})
    CHECK(r.contains(key));
}

TEST_CASE("estimate-k combines indices") {
  Scratch s;
  const auto in = kData + "/toy.fasta";
  REQUIRE(run("estimate-k --input " + in + " --k-range 2:8 --index asw,ch --weights 1,1 --out " +
              (s / "k.json")) == 0);
  const auto r = nlohmann::json::parse(slurp(s / "k.json"));
  CHECK(r["best_k"].get<int>() >= 2);
  CHECK(r.contains("combined"));
  CHECK(r["indices"].contains("asw"));
}

TEST_CASE("user errors exit 1 with one line and leave no partial output") {
  Scratch s;
  CHECK(run("cluster --input " + (s / "missing.csv") + " --k 2", s / "err.txt") == 1);
  const auto err = slurp(s / "err.txt");
  CHECK(err.rfind("error: ", 0) == 0);
  CHECK(std::count(err.begin(), err.end(), '\n') == 1);

  // Scores need a k range: the assignment written before the failure is removed.
  const auto in = kData + "/toy.fasta";
  CHECK(run("cluster --input " + in + " --k 2 --out " + (s / "a.csv") + " --scores-out " +
            (s / "s.tsv")) == 1);
  CHECK_FALSE(fs::exists(s / "a.csv"));
  CHECK_FALSE(fs::exists(s / "a.csv.manifest.json"));

  CHECK(run("cluster --input " + in + " --k 2 --k-range 2:3") == 1);
  CHECK(run("cluster --input " + in + " --k 2 --method nope") == 1);
  CHECK(run("cluster --input " + in + " --k 2 --n 100") == 1);
  CHECK(run("simulate --preset nope --out " + (s / "x.csv")) == 1);
  CHECK(run("frobnicate") == 1);
  CHECK(run("cluster --input " + in + " --k-range 2:x") == 1);
  CHECK(run("estimate-k --input " + in + " --k-range 2:5 --index ch --method levenshtein") == 1);
}

TEST_CASE("simulate writes a CSV and a JSON manifest") {
  Scratch s;
  REQUIRE(run("simulate --preset sim1-desk --replications 1 --out " + (s / "r.csv")) == 0);
  const auto csv = slurp(s / "r.csv");
  CHECK(csv.rfind("cell,replication,seed,method,", 0) == 0);
  const auto m = nlohmann::json::parse(slurp(s / "r.csv.manifest.json"));
  CHECK(m["report"]["cells"].size() == 2);
  CHECK(m["preset"] == "sim1-desk");
}

TEST_CASE("bench reports timings") {
  Scratch s;
  REQUIRE(run("bench --sequences 30 --length 40 --out " + (s / "b.json")) == 0);
  const auto b = nlohmann::json::parse(slurp(s / "b.json"));
  CHECK(b["sequences"] == 30);
  CHECK(b["seconds"].contains("ward"));
}
