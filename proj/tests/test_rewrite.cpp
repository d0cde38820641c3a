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
#include "pitwo/rewrite.hpp"
#include "pitwo/translate.hpp"
#include "support/oracles.hpp"

using namespace pitwo;

namespace {
const char* const kRacing = "x?(y) => y!() | x!(u) | x?(v) => v!()";
const char* const kSoup = "(a?() => 0 | a!()) | (b?() => 0 | b!())";

bool same_sets(const std::vector<TopDiagram>& got, const std::vector<CanonicalProcess>& want) {
  if (got.size() != want.size()) return false;
  std::vector<bool> used(want.size(), false);
  for (const auto& g : got) {
    bool hit = false;
    for (std::size_t i = 0; i < want.size() && !hit; ++i)
      if (!used[i] && equal(g.diagram, translate_top(want[i].term).diagram)) used[i] = hit = true;
    if (!hit) return false;
  }
  return true;
}
}  // namespace

TEST_SUITE("rewrite") {
  TEST_CASE("redex matching") {
    CHECK(find_diagram_redexes(translate_top(parse(kRacing))).size() == 2);
    CHECK(find_diagram_redexes(normalize(translate(parse(kRacing)))).empty());
    CHECK(find_diagram_redexes(translate_top(parse(kRacing), 0)).empty());
    CHECK(find_diagram_redexes(translate_top(Process::stop())).empty());
    CHECK(find_diagram_redexes(translate_top(parse("x?(y, z) => 0 | x!(u)"))).empty());
    CHECK(find_diagram_redexes(translate_top(parse("x?(y) => (x!(u) | 0)"))).empty());
    CHECK(find_diagram_redexes(translate_top(parse(kRacing), 2)).size() == 4);
  }

  TEST_CASE("spine and roots") {
    const Diagram d = translate_top(parse("a!() | a?() => 0")).diagram;
    CHECK(spine(d).size() == 3);
    const auto r = find_diagram_redexes(d).at(0);
    CHECK(name_root(d, d.node(r.output_node).inputs.at(0)) == r.subject_root);
    CHECK(name_root(d, d.node(r.input_node).inputs.at(0)) == r.subject_root);
  }

  TEST_CASE("firing") {
    const TopDiagram d = translate_top(parse("x?(y) => y!() | x!(u)"));
    const auto rs = find_diagram_redexes(d);
    REQUIRE(rs.size() == 1);
    const TopDiagram fired = apply_comm(d, rs[0]);
    CHECK(equal(fired.diagram, translate_top(parse("u!()")).diagram));
    CHECK(fired.diagram.count(Gen::kComm) == 1);
    CHECK(check_well_formed(fired.diagram).empty());
    const TopDiagram z = translate_top(parse("x?() => 0 | x!()"));
    CHECK(equal(apply_comm(z, find_diagram_redexes(z).at(0)).diagram, translate_top(Process::stop()).diagram));
    DiagramRedex stale = rs[0];
    stale.catalyst = stale.output_node;
    CHECK_THROWS_AS(apply_comm(d, stale), StaleRedex);
    stale = rs[0];
    stale.arity = 3;
    CHECK_THROWS_AS(apply_comm(d, stale), StaleRedex);
  }

  TEST_CASE("scope of restricted subjects") {
    const Process p = parse("(new x)(x?(v) => v!() | x!(a))");
    const auto got = comm_step(translate_top(p));
    CHECK(same_sets(got, reduce_step(p)));
  }

  TEST_CASE("comm_step mirrors reduce_step") {
    CHECK(same_sets(comm_step(translate_top(parse(kRacing))), reduce_step(parse(kRacing))));
    CHECK(comm_step(translate_top(parse(kRacing))).size() == 1);
    const Process distinct = parse("x?(y) => y!() | x!(u) | x?(v) => 0");
    CHECK(comm_step(translate_top(distinct)).size() == 2);
    CHECK(same_sets(comm_step(translate_top(distinct)), reduce_step(distinct)));
    CHECK(comm_step(translate_top(Process::stop())).empty());
    std::mt19937_64 rng(17);
    const std::vector<Name> names{Name("a"), Name("b")};
    for (int i = 0; i < 150; ++i) {
      const Process p = testing::random_term(rng, names, 2 + static_cast<int>(rng() % 6), 1);
      CAPTURE(print(p));
      CHECK(same_sets(comm_step(translate_top(p)), reduce_step(p)));
    }
  }

  TEST_CASE("one catalyst means one firing at a time") {
    const Diagram soup = translate_top(parse(kSoup)).diagram;
    const auto steps = concurrent_step(soup, 1);
    CHECK(steps.size() == 2);
    for (const auto& s : steps) CHECK(s.redexes.size() == 1);
    const Diagram soup2 = translate_top(parse(kSoup), 2).diagram;
    for (const auto& s : concurrent_step(soup2, 1)) CHECK(s.redexes.size() == 1);
    for (const auto& s : concurrent_step(soup, 2)) CHECK(s.redexes.size() == 1);
  }

  TEST_CASE("two catalysts fire both pairs at once") {
    const Diagram soup = translate_top(parse(kSoup), 2).diagram;
    const auto steps = concurrent_step(soup, 2);
    REQUIRE(steps.size() == 1);
    CHECK(steps[0].redexes.size() == 2);
    CHECK(equal(steps[0].result, translate_top(Process::stop(), 2).diagram));
    CHECK(steps[0].result.count(Gen::kComm) == 2);
    CHECK(concurrent_step(translate_top(Process::stop(), 2).diagram, 2).empty());
    // the two receivers compete for one sender, so no joint step exists
    const auto race = concurrent_step(translate_top(parse("x?(y) => y!() | x!(u) | x?(v) => 0"), 2).diagram, 2);
    CHECK(race.size() == 2);
    for (const auto& s : race) CHECK(s.redexes.size() == 1);
  }
}
