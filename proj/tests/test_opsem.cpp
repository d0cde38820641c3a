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

#include <random>

#include "doctest.h"
#include "pitwo/congruence.hpp"
#include "pitwo/error.hpp"
#include "pitwo/opsem.hpp"
#include "support/oracles.hpp"

using namespace pitwo;

namespace {
const char* const kRacing = "x?(y) => y!() | x!(u) | x?(v) => v!()";

std::set<std::string> keys(const std::vector<CanonicalProcess>& cs) {
  std::set<std::string> out;
  for (const auto& c : cs) out.insert(c.key);
  return out;
}
}  // namespace

TEST_SUITE("opsem") {
  TEST_CASE("redexes") {
    CHECK(find_redexes(parse(kRacing)).size() == 2);
    CHECK(find_redexes(Process::stop()).empty());
    CHECK(find_redexes(parse("x?(y, z) => 0 | x!(u)")).empty());
    CHECK(find_redexes(parse("(new x)(x?(v) => 0 | x!(a))")).size() == 1);
  }

  TEST_CASE("fire") {
    const Process p = parse("x?(y) => y!() | x!(u)");
    CHECK(fire(p, find_redexes(p).at(0)).key == canonical_form(parse("u!()")).key);
    const Process q = parse("(new x)(x?(v) => 0 | x!(a))");
    CHECK(fire(q, find_redexes(q).at(0)).key == canonical_form(parse("(new x) 0")).key);
    const Process r = parse("x?() => 0 | x!()");
    CHECK(fire(r, find_redexes(r).at(0)).key == canonical_form(Process::stop()).key);
    CHECK_THROWS_AS(fire(r, Redex{Name("x"), 0, 0, 0}), StaleRedex);
    CHECK_THROWS_AS(fire(r, Redex{Name("x"), 5, 1, 0}), StaleRedex);
  }

  TEST_CASE("racing: the loser stays guarded") {
    const auto succ = successors(parse(kRacing));
    REQUIRE(succ.size() == 2);
    const std::set<std::string> expected{canonical_form(parse("u!() | x?(v) => v!()")).key,
                                         canonical_form(parse("u!() | x?(y) => y!()")).key};
    CHECK(keys(succ) == expected);
    // the two reducts are alpha-variants, so only one class remains
    CHECK(reduce_step(parse(kRacing)).size() == 1);
    CHECK(reduce_step(parse("x?(y) => y!() | x!(u) | x?(v) => 0")).size() == 2);
  }

  TEST_CASE("successor sets") {
    CHECK(reduce_step(parse("x!(u)")).empty());
    const Process p = parse("(x?(y) => 0 | x!(a)) | (x?(y) => 0 | x!(a))");
    CHECK(successors(p).size() == 4);
    CHECK(keys(reduce_step(p)) == testing::naive_reduct_keys(p));
    CHECK(reduce_step(p).size() == 1);
  }

  TEST_CASE("reduce_step agrees with the rule-based oracle") {
    std::mt19937_64 rng(3);
    const std::vector<Name> names{Name("a"), Name("b")};
    int reducing = 0;
    for (int i = 0; i < 400; ++i) {
      auto thread = [&] { return testing::random_term(rng, names, 1 + static_cast<int>(rng() % 3), 1); };
      const Process p = Process::par(thread(), Process::par(thread(), thread()));
      CAPTURE(print(p));
      const auto got = keys(reduce_step(p));
      CHECK(got == testing::naive_reduct_keys(p));
      reducing += !got.empty();
    }
    CHECK(reducing >= 20);
  }

  TEST_CASE("reachable graphs") {
    auto g = reachable(Process::stop(), 10);
    CHECK(g.states.size() == 1);
    CHECK(g.edges.empty());
    g = reachable(parse("x?(y) => 0 | x!(u)"), 10);
    CHECK(g.states.size() == 2);
    CHECK(g.edges.size() == 1);
    g = reachable(parse("x?(y) => y!() | x!(u) | x?(v) => 0"), 10);
    CHECK(g.states.size() == 3);
    CHECK(g.edges.size() == 2);
    CHECK_THROWS_AS(reachable(parse("a!() | a?() => b!() | b?() => c!() | c?() => 0"), 2), BudgetExceeded);
    const auto j = to_json(reachable(parse("x?(y) => 0 | x!(u)"), 10));
    CHECK(j.at("states").size() == 2);
  }
}
