// Copyright 2026 The hoareopt Authors
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


#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "commands.hpp"
#include "hoareopt/benchmarks.hpp"
#include "hoareopt/circuit.hpp"

using namespace hoareopt;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
  public:
    TempDir() : path_(fs::temp_directory_path() / ("hoareopt_cli_" + std::to_string(::getpid()))) {
        fs::remove_all(path_);
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string file(const std::string& name, const std::string& text) const {
        std::ofstream(path_ / name) << text;
        return (path_ / name).string();
    }
    std::string path(const std::string& name) const { return (path_ / name).string(); }

  private:
    fs::path path_;
};

std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("optimize Bell+Swap") {
    TempDir dir;
    std::string in = dir.file("bs.qc", serialize(example_bell_swap()));
    Run hoare = run({"optimize", in, "--pass", "hoare", "-o", dir.path("out.qc")});
    REQUIRE(hoare.code == 0);
    CHECK(parse_circuit(slurp(dir.path("out.qc"))) == example_bell());
    CHECK(slurp(dir.path("out.qc.log.jsonl")).find("trivial_single") != std::string::npos);

    Run peep = run({"optimize", in, "--pass", "peephole"});
    REQUIRE(peep.code == 0);
    CHECK(parse_circuit(peep.out) == example_bell_swap());
}

TEST_CASE("optimize an empty circuit") {
    TempDir dir;
    Run r = run({"optimize", dir.file("e.qc", "")});
    CHECK(r.code == 0);
    CHECK(parse_circuit(r.out).instructions().empty());
}

TEST_CASE("optimize emits smt2") {
    TempDir dir;
    std::string in = dir.file("bs.qc", serialize(example_bell_swap()));
    Run r = run({"optimize", in, "--emit", "smt2", dir.path("smt")});
    REQUIRE(r.code == 0);
    CHECK(slurp(dir.path("smt/bs.smt2")).find("(check-sat)") != std::string::npos);
    CHECK(run({"optimize", in, "--emit", "dot", dir.path("smt")}).code == 1);
}

TEST_CASE("verify") {
    TempDir dir;
    std::string bs = dir.file("bs.qc", serialize(example_bell_swap()));
    std::string bell = dir.file("bell.qc", serialize(example_bell()));
    CHECK(run({"verify", bs, bell}).code == 0);

    std::string x = dir.file("x.qc", "input q\nx q\n");
    std::string e = dir.file("e.qc", "input q\n");
    Run bad = run({"verify", x, e});
    CHECK(bad.code == 3);
    CHECK(bad.out.find("q=0") != std::string::npos);

    std::string z = dir.file("z.qc", "input q\nz q\n");
    CHECK(run({"verify", z, e}).code == 0);
    CHECK(run({"verify", z, e, "--common-phase"}).code == 3);
    std::string pre = dir.file("pre.txt", "eq(q, 1)");
    CHECK(run({"verify", z, e, "--common-phase", "--pre", pre}).code == 0);
}

TEST_CASE("verify budget") {
    TempDir dir;
    std::string text;
    for (int i = 0; i < 15; ++i) text += "input q" + std::to_string(i) + "\n";
    std::string big = dir.file("big.qc", text);
    CHECK(run({"verify", big, big}).code == 4);
}

TEST_CASE("stats") {
    TempDir dir;
    Run r = run({"stats", dir.file("bell.qc", serialize(example_bell()))});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("\"width\": 2") != std::string::npos);
    CHECK(r.out.find("\"depth\": 2") != std::string::npos);
    CHECK(r.out.find("\"cx\": 1") != std::string::npos);
}

TEST_CASE("bench") {
    Run r = run({"bench", "chain", "--n", "2,64"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("chain,64,64,64,64,312,") != std::string::npos);
    CHECK(run({"bench", "chain", "--n", "2,64"}).out == r.out);
    Run m = run({"bench", "modred", "--n", "4", "--format", "json"});
    REQUIRE(m.code == 0);
    CHECK(m.out.find("\"width_opt\": 9") != std::string::npos);
    CHECK(run({"bench", "nosuch"}).code == 1);
}

TEST_CASE("exit codes") {
    TempDir dir;
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"optimize", dir.file("bad.qc", "alloc a\nfrob a\n")}).code == 2);
    CHECK(run({"optimize", dir.file("ov.qc", "alloc a\ncx a a\n")}).code == 2);
    CHECK(run({"optimize", dir.path("missing.qc")}).code == 2);
    CHECK(run({"optimize", "--pass", "sideways", dir.file("ok.qc", "")}).code == 1);
    CHECK(run({"--help"}).code == 0);
}
