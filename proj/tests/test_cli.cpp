/* Copyright 2026 The tropseq Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tropseq/cli.hpp"

using namespace tropseq;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(TROPSEQ_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("valuation table") {
    const auto r = run({"valuation", "--steps", "1.2;1.2", "--oracle"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("p12 (0,0,0,0)\np13 (0,0,0,1)\np14 (0,1,0,0)\n") != std::string::npos);
    const auto t1 = run({"valuation", "--sequence-file", data("table1_S.txt"), "--table1-order"});
    CHECK(t1.out.find("p23 (0,0,1,0)\np14 (0,1,0,0)\n") != std::string::npos);
}

TEST_CASE("valuation formats") {
    const auto csv = run({"valuation", "--steps", "1.2;1.2", "--format", "csv"});
    REQUIRE(csv.code == 0);
    CHECK(csv.out.rfind("root,1.2,1.3,1.4,2.3,2.4,3.4\n1.4,0,0,0,0,1,1\n", 0) == 0);
    const auto js = run({"valuation", "--sequence", "k=2 n=4 steps=3.2;1.2", "--format", "json"});
    REQUIRE(js.code == 0);
    const auto j = nlohmann::json::parse(js.out);
    CHECK(j["valuations"].size() == 6);
    CHECK(j["valuations"][5]["valuation"] == std::vector<int>{0, 1, 1, 0});
    CHECK(run({"valuation", "--steps", "1.2;1.2", "--format", "dot"}).code == kExitInput);
}

TEST_CASE("input errors exit with 2") {
    CHECK(run({"valuation", "--steps", "1.1;1.2"}).code == kExitInput);
    CHECK(run({"valuation"}).code == kExitInput);
    CHECK(run({"valuation", "--steps", "1.2;1.2", "--sequence", "k=2 n=4 steps=1.2;1.2"}).code == kExitInput);
    CHECK(run({"valuation", "--sequence-file", "/nonexistent"}).code == kExitInput);
    CHECK(run({"sweep", "--n", "5", "--sample", "3"}).code == kExitInput);
    CHECK(run({"sweep", "--k", "3", "--n", "5"}).code == kExitInput);
    CHECK(run({"bogus"}).code == kExitInput);
    CHECK(run({}).code == kExitInput);
    CHECK(run({"tree", "--steps", "4.1.2;3.1.2", "--k", "3"}).code == kExitInput);
    CHECK(run({"valuation", "--steps", "1.2;1.2", "--format", "xml"}).code == kExitInput);
}

TEST_CASE("tree command") {
    const auto r = run({"tree", "--sequence-file", data("figure3.txt")});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("T6 cherries={1,3},{2,5},{4,6}") != std::string::npos);
    const auto n3 = run({"tree", "--sequence", "k=2 n=3 steps=2.1"});
    REQUIRE(n3.code == 0);
    CHECK(n3.out.find("T3 cherries={1,2},{1,3},{2,3} shape=(LLL)\n") != std::string::npos);
    const auto dot = run({"tree", "--steps", "4.5;2.3;2.3;1.2", "--format", "dot"});
    CHECK(dot.out.find("graph T6 {") != std::string::npos);
    const auto js = run({"tree", "--steps", "4.5;2.3;2.3;1.2", "--format", "json", "--path"});
    CHECK(nlohmann::json::parse(js.out)["levels"].size() == 4);
}

TEST_CASE("verify and sweep") {
    const auto v = run({"verify", "--steps", "4.5;2.3;2.3;1.2"});
    CHECK(v.code == 0);
    CHECK(v.out.find("15/15 agree\n") != std::string::npos);
    const auto vj = run({"verify", "--steps", "1.2;1.2", "--format", "json"});
    CHECK(nlohmann::json::parse(vj.out).size() == 1);

    const auto s4 = run({"sweep", "--n", "4"});
    CHECK(s4.code == 0);
    CHECK(s4.out.find("sequences=12 relations=12 agree=12 binomial=12") != std::string::npos);
    const auto s5 = run({"sweep", "--n", "5", "--format", "json"});
    const auto j = nlohmann::json::parse(s5.out);
    CHECK(j["sequences"] == 144);
    CHECK(j["agree"] == 720);
    CHECK(j["failed"] == 0);
}

TEST_CASE("sweeps do not depend on the worker count") {
    const auto a = run({"sweep", "--n", "6", "--sample", "40", "--seed", "9", "--jobs", "1", "--oracle"});
    const auto b = run({"sweep", "--n", "6", "--sample", "40", "--seed", "9", "--jobs", "4", "--oracle"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("# sample=40 seed=9\n") == 0);
    const auto k3 = run({"sweep", "--k", "3", "--n", "6", "--sample", "5", "--seed", "1", "--oracle", "--jobs", "2"});
    CHECK(k3.code == 0);
    CHECK(k3.out.find("full_rank=5 oracle=5 failed=0") != std::string::npos);
}

TEST_CASE("polytope command") {
    const auto r = run({"polytope", "--steps", "1.2;1.2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("vertices=6 dim=4 ambient=4 in_hypercube=true interior_lattice_points=none") !=
          std::string::npos);
    const auto j = nlohmann::json::parse(run({"polytope", "--steps", "3.2;1.2", "--format", "json"}).out);
    CHECK(j["vertices"].size() == 6);
    CHECK(j["interior_lattice_points"].empty());
}

TEST_CASE("trees and tree-to-seq") {
    CHECK(run({"trees", "--n", "8"}).out.rfind("n=8 unlabeled=4\n", 0) == 0);
    CHECK(run({"trees", "--n", "6", "--labeled"}).out.rfind("n=6 labeled=105\n", 0) == 0);
    const auto js = nlohmann::json::parse(run({"trees", "--n", "5", "--labeled", "--format", "json"}).out);
    CHECK(js["count"] == 15);

    const auto path = std::filesystem::temp_directory_path() / "tropseq_caterpillar.json";
    {
        std::ofstream f(path);
        f << R"({"n":6,"edges":[[1,7],[2,7],[7,8],[3,8],[8,9],[4,9],[9,10],[5,10],[6,10]]})";
    }
    const auto r = run({"tree-to-seq", "--tree", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("roundtrip ok") != std::string::npos);
    const auto rj = nlohmann::json::parse(run({"tree-to-seq", "--tree", path.string(), "--format", "json"}).out);
    CHECK(rj["roundtrip"] == true);
    CHECK(rj["relabel"].size() == 6);
    std::filesystem::remove(path);
}
