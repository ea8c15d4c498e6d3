// Copyright 2026 The Arrovian Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
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

#include "arrovian/cli.hpp"
#include "arrovian/format.hpp"

using namespace arrovian;

namespace {

namespace fs = std::filesystem;

const fs::path kData = ARROVIAN_TEST_DATA;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return (kData / name).string(); }

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("arrovian_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write(const fs::path& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("enumerate-orders") {
  CHECK(call({"enumerate-orders", "--m", "3"}).out.rfind("count=29\n", 0) == 0);
  CHECK(call({"enumerate-orders", "--m", "3", "--linear"}).out.rfind("count=13\n", 0) == 0);
  CHECK(call({"enumerate-orders", "--m", "4"}).out.rfind("count=355\n", 0) == 0);
  CHECK(call({"enumerate-orders", "--m", "5"}).code == 2);
}

TEST_CASE("enumerate-rules writes verifiable rule files") {
  const fs::path dir = scratch_dir("rules");
  const Result r = call({"enumerate-rules", "--n", "2", "--out-dir", dir.string()});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("count=6\n", 0) == 0);
  int files = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    ++files;
    const Result v = call({"verify", "--rule", entry.path().string(), "--all-axioms"});
    CHECK(v.code == 0);
    CHECK(v.out.find("holds=false") == std::string::npos);
    const Result e = call({"extract", "--rule", entry.path().string(), "--paranoid"});
    CHECK(e.code == 0);
    const RuleSpec spec = load_rule(entry.path());
    CHECK(parse_delta(e.out) == std::get<rule::Delta>(spec.variant).delta);
  }
  CHECK(files == 6);
  CHECK(call({"enumerate-rules", "--n", "3"}).out.rfind("count=35\n", 0) == 0);
  CHECK(call({"enumerate-rules", "--n", "3", "--cond1-only"}).out.rfind("count=216\n", 0) == 0);
  CHECK(call({"enumerate-rules", "--n", "5"}).code == 2);
  CHECK(call({"enumerate-rules"}).code == 2);
  fs::remove_all(dir);
}

TEST_CASE("verify") {
  const Result ok = call({"verify", "--rule", data("two_tier.rule")});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("axiom=iia holds=true") != std::string::npos);

  const Result one = call({"verify", "--rule", data("lex.rule"), "--axiom", "strong_unanimity"});
  CHECK(one.code == 0);
  CHECK(one.out == "axiom=strong_unanimity holds=true\n");

  // A priority sequence is not anonymous.
  const Result anon = call({"verify", "--rule", data("lexseq21.rule"), "--axiom", "anonymity"});
  CHECK(anon.code == 1);
  CHECK(anon.out.find("holds=false") != std::string::npos);
  CHECK(anon.out.find("witness") != std::string::npos);

  const Result sandwich = call({"verify", "--rule", data("two_tier.rule"), "--sandwich"});
  CHECK(sandwich.code == 0);
  CHECK(sandwich.out.find("chain={1,2}<{1,2,3}") != std::string::npos);
  CHECK(sandwich.out.find("lower_equal=false") != std::string::npos);

  CHECK(call({"verify", "--rule", data("two_tier.rule"), "--axiom", "fairness"}).code == 2);
  CHECK(call({"verify", "--rule", data("missing.rule")}).code == 2);
  CHECK(call({"verify"}).code == 2);
}

TEST_CASE("extract") {
  const Result ex = call({"extract", "--rule", data("two_tier.rule")});
  CHECK(ex.code == 0);
  CHECK(parse_delta(ex.out) == parse_delta(read_file(data("two_tier.delta"))));

  const Result dot = call({"extract", "--rule", data("lexseq21.rule"), "--format", "dot"});
  CHECK(dot.out.rfind("digraph", 0) == 0);

  const Result split = call({"extract", "--rule", data("split.rule")});
  CHECK(split.code == 0);
  CHECK(parse_dmap(split.out) == parse_dmap(read_file(data("split.dmap"))));

  CHECK(call({"extract", "--rule", data("two_tier.rule"), "--paranoid"}).code == 2);
  CHECK(call({"extract", "--rule", data("lex.rule"), "--m", "2"}).code == 2);
  CHECK(call({"extract", "--rule", data("lexseq21.rule"), "--domain", "linear"}).code == 0);
  CHECK(call({"extract", "--rule", data("lexseq21.rule"), "--domain", "cyclic"}).code == 2);
}

TEST_CASE("classify") {
  const Result dict = call({"classify", "--n", "2", "--require-strong-unanimity", "--linear-range"});
  CHECK(dict.code == 0);
  CHECK(dict.out.rfind("count=2\n", 0) == 0);
  CHECK(dict.out.find("# lexseq=(1,2)") != std::string::npos);
  CHECK(dict.out.find("# lexseq=(2,1)") != std::string::npos);
  CHECK(call({"classify", "--n", "3", "--linear-range"}).out.rfind("count=16\n", 0) == 0);
  CHECK(call({"classify", "--n", "3", "--require-strong-unanimity", "--linear-range"})
            .out.rfind("count=6\n", 0) == 0);

  const Result one = call({"classify", "--delta", data("two_tier.delta")});
  CHECK(one.code == 0);
  CHECK(one.out.find("cond1=true cond2=true") != std::string::npos);
  CHECK(one.out.find("chain={1,2}<{1,2,3}") != std::string::npos);
  CHECK(one.out.find("linear_range=none") != std::string::npos);

  const fs::path dir = scratch_dir("classify");
  write(dir / "bad.delta", "n=2\n{} -> {1}\n{1} -> {1}\n{2} -> {2}\n{1,2} -> {1,2}\n");
  const Result bad = call({"classify", "--delta", (dir / "bad.delta").string()});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("cond1=false") != std::string::npos);
  CHECK(bad.out.find("violation condition=1 N={2} M={}") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("extend, compare, render-dot, eval") {
  const Result ext = call({"extend", "--rule", data("lexseq21.rule")});
  CHECK(ext.code == 0);
  CHECK(parse_delta(ext.out).at(VoterSet{0}) == VoterSet{0b10});

  const fs::path dir = scratch_dir("misc");
  write(dir / "id.delta", format_delta(DeltaMap::identity(3)));
  const Result cmp = call({"compare", "--delta", (dir / "id.delta").string(), "--other",
                           data("two_tier.delta")});
  CHECK(cmp.code == 0);
  CHECK(cmp.out == "superset\n");
  CHECK(call({"compare", "--delta", data("two_tier.delta"), "--other", data("two_tier.delta")})
            .out == "equal\n");

  CHECK(call({"render-dot", "--delta", data("two_tier.delta")}).out.rfind("digraph", 0) == 0);
  CHECK(call({"render-dot", "--rule", data("lex.rule"), "--format", "text"}).out.rfind("n=3", 0) ==
        0);
  CHECK(call({"render-dot"}).code == 2);

  write(dir / "p.profile", "n=2\n\nm=3\n111\n011\n001\n\nm=3\n100\n110\n111\n");
  const Result ev = call({"eval", "--rule", data("lexseq21.rule"), "--profile",
                          (dir / "p.profile").string()});
  CHECK(ev.code == 0);
  CHECK(ev.out == "m=3\n100\n110\n111\n");
  CHECK(call({"eval", "--rule", data("lex.rule"), "--profile", (dir / "p.profile").string()})
            .code == 2);
  write(dir / "q.profile", "n=3\n\nm=3\n111\n011\n001\n\nm=3\n111\n011\n001\n\nm=3\n100\n110\n111\n");
  const Result split = call({"eval", "--rule", data("split.rule"), "--profile",
                             (dir / "q.profile").string()});
  CHECK(split.code == 0);
  CHECK(split.out == "m=3\n111\n011\n001\n");
  fs::remove_all(dir);
}

TEST_CASE("usage errors") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}
