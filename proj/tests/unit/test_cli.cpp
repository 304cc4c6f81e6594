// Copyright 2026 The jcontainers Authors
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

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "jc/cli.hpp"
#include "jc/io.hpp"

using namespace jc;
namespace fs = std::filesystem;

namespace {

const std::string kData = JC_TEST_DATA_DIR;

struct Result {
  int code = 0;
  std::string out, err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Result r;
  r.code = dispatch(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// Temporary directory removed on scope exit.
struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("jc_cli_test_" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("janson verdicts and exit codes") {
  const Result yes = run({"janson", "--hypergraph", kData + "/single_edge.hg", "--p", "1/2",
                          "--R", "1/5"});
  CHECK(yes.code == 0);
  const auto j = nlohmann::json::parse(yes.out);
  CHECK(j["answer"] == "YES");
  CHECK(j["r_star"]["estimate"].get<double>() == doctest::Approx(0.25).epsilon(1e-6));

  const Result no = run({"janson", "--hypergraph", kData + "/single_edge.hg", "--p", "1/2",
                         "--R", "1"});
  CHECK(no.code == 0);
  CHECK(nlohmann::json::parse(no.out)["answer"] == "NO");

  CHECK(run({"janson", "--hypergraph", kData + "/missing.hg", "--p", "1/2", "--R", "1"}).code ==
        2);
  CHECK(run({"janson", "--hypergraph", kData + "/single_edge.hg", "--p", "3/2", "--R", "1"})
            .code == 2);
}

TEST_CASE("certify-cover rejects a size-1 edge") {
  const Result r = run({"certify-cover", "--target", kData + "/triangle_pairs.hg", "--cover",
                        kData + "/size1_cover.hg", "--p", "1/2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("{0}") != std::string::npos);
}

TEST_CASE("ramsey arrows") {
  const Result r = run({"ramsey", "arrows", "--G", "K6", "--H", "K3"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["arrows"] == true);
  CHECK_FALSE(j.contains("colouring"));

  const Result k5 = run({"ramsey", "arrows", "--G", "K5", "--H", "K3"});
  CHECK(k5.code == 0);
  const auto j5 = nlohmann::json::parse(k5.out);
  CHECK(j5["arrows"] == false);
  CHECK(j5["colouring"].size() == 10);

  CHECK(run({"ramsey", "arrows", "--G", "K8", "--H", "K3", "--budget", "5"}).code == 3);
}

TEST_CASE("parse errors print usage") {
  const Result r = run({"janson", "--bogus", "1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("error:") != std::string::npos);
  CHECK(r.err.find("--hypergraph") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("seed precedence") {
  const std::vector<std::string> base = {"ramsey", "mc", "--experiment", "chernoff", "--config",
                                         kData + "/chernoff.cfg"};
  auto with = [&](std::vector<std::string> extra) {
    std::vector<std::string> args = base;
    args.insert(args.end(), extra.begin(), extra.end());
    return run(args).out;
  };
  const std::string seed7 = with({"--seed", "7"});
  const std::string seed1 = with({"--seed", "1"});
  CHECK(seed7 != seed1);

  ::setenv("JC_SEED", "7", 1);
  CHECK(with({}) == seed7);
  CHECK(with({"--seed", "1"}) == seed1);
  ::setenv("JC_SEED", "not-a-number", 1);
  CHECK(run(base).code == 2);
  ::unsetenv("JC_SEED");
  CHECK(with({}) == seed1);
}

TEST_CASE("--out writes run.json with digests") {
  TempDir dir;
  const Result r = run({"janson", "--hypergraph", kData + "/triple.hg", "--p", "1/2", "--R",
                        "1/100", "--out", dir.path.string()});
  REQUIRE(r.code == 0);
  const auto rec = nlohmann::json::parse(read_file((dir.path / "run.json").string()));
  CHECK(rec["exit_status"] == 0);
  CHECK(rec["stdout"] == r.out);
  CHECK(rec["inputs"].size() == 1);
  CHECK(rec["inputs"][0]["fnv1a64"].get<std::string>().size() == 16);
  CHECK(rec["command"][0] == "janson");
  REQUIRE(rec["artifacts"].size() == 1);
  const std::string name = rec["artifacts"][0]["name"];
  CHECK(fs::exists(dir.path / name));

  // The record is written even when the command fails.
  TempDir failed;
  const Result bad = run({"janson", "--hypergraph", kData + "/missing.hg", "--p", "1/2", "--R",
                          "1", "--out", failed.path.string()});
  CHECK(bad.code == 2);
  CHECK(nlohmann::json::parse(read_file((failed.path / "run.json").string()))["exit_status"] == 2);
}

TEST_CASE("copies writes hypergraph and provenance") {
  TempDir dir;
  const std::string hg = (dir.path / "c5.hg").string();
  const std::string prov = (dir.path / "c5.prov").string();
  const Result r = run({"copies", "--F", "P3", "--Gprime", "C5", "--G", "C5", "--hg-out", hg,
                        "--prov-out", prov});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["edges"] == 5);
  CHECK(read_hypergraph(hg).num_edges() == 5);
  CHECK(parse_provenance(read_file(prov), 5).size() == 5);
}
