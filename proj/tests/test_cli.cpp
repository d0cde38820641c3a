/*
 * Copyright 2026 The pitwo Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <sstream>

#include "../tools/cli.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace pitwo;

namespace {
struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "pitwo");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}
}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("step") {
    const Run r = cli({"step", "x?(y) => y!() | x!(u)"});
    CHECK(r.code == 0);
    CHECK(r.out == "u!()\n");
    const Run j = cli({"--json", "step", "x?(y) => y!() | x!(u) | x?(v) => v!()"});
    CHECK(j.code == 0);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc.at("successors").size() == 2);
    CHECK(doc.at("distinct").size() == 1);
  }

  TEST_CASE("bisim and equiv verdicts") {
    CHECK(cli({"bisim", "0", "x?(y) => 0"}).code == 0);
    CHECK(cli({"bisim", "x!()", "0"}).code == 1);
    CHECK(cli({"equiv", "a!() | b!()", "b!() | a!()"}).code == 0);
    CHECK(cli({"equiv", "a!()", "b!()"}).code == 1);
    CHECK(cli({"--gc-vacuous", "equiv", "(new x) 0", "0"}).code == 0);
    CHECK(cli({"equiv", "(new x) 0", "0"}).code == 1);
  }

  TEST_CASE("term queries") {
    CHECK(cli({"parse", "a?(x) => x!()|b!()"}).out == "a?(x) => x!() | b!()\n");
    CHECK(cli({"fn", "(new x) x!(z)"}).out == "z\n");
    CHECK(cli({"barbs", "(new u)(u!(a) | z!(u))"}).out == "z\n");
    CHECK(cli({"canon", "0 | a!()"}).out == "a!()\n");
    const Run run = cli({"--json", "run", "x?(y) => 0 | x!(u)"});
    CHECK(nlohmann::json::parse(run.out).at("states").size() == 2);
  }

  TEST_CASE("diagram commands") {
    const Run t = cli({"--json", "translate", "a?(x) => x!()"});
    CHECK(t.code == 0);
    CHECK(nlohmann::json::parse(t.out).contains("nodes"));
    CHECK(cli({"--dot", "translate", "a!()"}).out.find("digraph") != std::string::npos);
    CHECK(cli({"--dot", "--top", "translate", "a!()"}).out.find("comm") != std::string::npos);
    CHECK(cli({"redexes", "x?(y) => y!() | x!(u) | x?(v) => v!()"}).code == 0);
    const Run c = cli({"crewrite", "x?(y) => y!() | x!(u)"});
    CHECK(c.code == 0);
    CHECK(c.out.find("matches") != std::string::npos);
    const Run k = cli({"--comm-tokens", "2", "concurrent", "(a?() => 0 | a!()) | (b?() => 0 | b!())"});
    CHECK(k.code == 0);
    CHECK(cli({"--index", "5", "crewrite", "x?(y) => y!() | x!(u)"}).code == 2);
  }

  TEST_CASE("errors") {
    const Run p = cli({"step", "x?(y => 0"});
    CHECK(p.code == 2);
    CHECK(p.err.find("1:6") != std::string::npos);
    CHECK(cli({"nope"}).code == 2);
    CHECK(cli({}).code == 2);
    CHECK(cli({"--lemma", "bogus", "verify"}).code == 2);
    CHECK(cli({"--max-states", "2", "run", "a!() | a?() => b!() | b?() => c!() | c?() => 0"}).code == 2);
    CHECK(cli({"step", "@/nonexistent/term.pi"}).code == 2);
  }

  TEST_CASE("help") { CHECK(cli({"--help"}).code == 0); }

  TEST_CASE("verify") {
    const Run r = cli({"--lemma", "reduction", "--max-size", "2", "verify"});
    CHECK(r.code == 0);
    const Run j = cli({"--json", "--lemma", "observation", "--max-size", "2", "verify"});
    CHECK(j.code == 0);
    CHECK(nlohmann::json::parse(j.out).at("counterexamples").empty());
  }
}
