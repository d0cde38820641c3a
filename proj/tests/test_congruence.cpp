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
#include "pitwo/harness.hpp"
#include "support/oracles.hpp"

using namespace pitwo;

TEST_SUITE("congruence") {
  TEST_CASE("canonical forms of the axioms") {
    CHECK(canonical_form(parse("0 | x!()")).key == canonical_form(parse("x!()")).key);
    CHECK(canonical_form(parse("b!() | a!()")).key == canonical_form(parse("a!() | b!()")).key);
    CHECK(canonical_form(parse("(new x) x!() | z!()")).key ==
          canonical_form(parse("(new n0)(n0!() | z!())")).key);
    CHECK(canonical_form(parse("((new x) x!()) | z!()")).key ==
          canonical_form(parse("(new n0)(n0!() | z!())")).key);
    CHECK(canonical_form(parse("(new x)(new x) x!()")).key == canonical_form(parse("(new n0) n0!()")).key);
  }

  TEST_CASE("canonical terms are fixed points") {
    for (const char* s : {"(new x)(x!(u) | x?(v) => 0)", "a?(y) => (b!() | 0 | y!())", "(new x)(new y) x!(y)"}) {
      const auto c = canonical_form(parse(s));
      CHECK(canonical_form(c.term).key == c.key);
      CHECK(alpha_eq(canonical_form(c.term).term, c.term));
    }
  }

  TEST_CASE("congruent") {
    const Process p = parse("a!()"), q = parse("b?() => 0"), r = parse("c!(a)");
    CHECK(congruent(p, p));
    CHECK(congruent(Process::par(p, Process::par(q, r)), Process::par(Process::par(p, q), r)));
    CHECK_FALSE(congruent(parse("x!()"), parse("y!()")));
    CHECK(congruent(parse("a?(y) => (y!() | 0)"), parse("a?(z) => z!()")));
    CHECK_FALSE(congruent(parse("a?() => b!()"), parse("a?() => 0 | b!()")));
  }

  TEST_CASE("vacuous restriction") {
    CHECK_FALSE(congruent(parse("(new x) 0"), parse("0")));
    CHECK(congruent(parse("(new x) 0"), parse("0"), {.gc_vacuous = true}));
    CHECK(congruent(parse("(new x)(new y) x!()"), parse("(new x) x!()")));
  }

  TEST_CASE("bounded oracle") {
    CHECK(oracle_congruent(parse("0 | x!()"), parse("x!()"), 1));
    CHECK_FALSE(oracle_congruent(parse("x!()"), parse("y!()"), 4));
    CHECK(oracle_congruent(parse("((new x) x!()) | z!()"), parse("(new n0)(n0!() | z!())"), 2));
  }

  TEST_CASE("axiom steps preserve the canonical form") {
    std::mt19937_64 rng(11);
    const std::vector<Name> names{Name("a"), Name("b")};
    for (int i = 0; i < 200; ++i) {
      const Process p = testing::random_term(rng, names, 1 + static_cast<int>(rng() % 6));
      const auto key = canonical_form(p).key;
      for (const auto& q : axiom_steps(p)) {
        CAPTURE(print(p));
        CAPTURE(print(q));
        CHECK(canonical_form(q).key == key);
      }
    }
  }

  TEST_CASE("closure partition matches canonical keys on small raw terms") {
    const auto names = alphabet(2);
    CongruenceClosure closure;
    std::map<std::size_t, std::string> key_of_class;
    std::map<std::string, std::size_t> class_of_key;
    std::vector<std::pair<std::size_t, std::string>> rows;
    for (std::size_t size = 1; size <= 4; ++size)
      for (const auto& p : enumerate_raw(size, names, 1, true, true))
        rows.emplace_back(closure.add(p), canonical_form(p).key);
    std::size_t bad = 0;
    for (auto& [state, key] : rows) {
      const std::size_t cls = closure.class_of(state);
      auto [a, fa] = key_of_class.emplace(cls, key);
      auto [b, fb] = class_of_key.emplace(key, cls);
      if (a->second != key || b->second != cls) ++bad;
    }
    CHECK(bad == 0);
    CHECK(rows.size() > 1000);
  }
}
