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

#include "doctest.h"
#include "pitwo/congruence.hpp"
#include "pitwo/harness.hpp"

using namespace pitwo;

namespace {
std::set<std::string> keys(const std::vector<Process>& ps) {
  std::set<std::string> out;
  for (const auto& p : ps) out.insert(canonical_form(p).key);
  return out;
}
}  // namespace

TEST_SUITE("harness") {
  TEST_CASE("tiny corpora") {
    const CorpusSpec empty{.name_alphabet_size = 1, .max_prefixes = 0, .max_arity = 0,
                           .max_parallel_width = 1, .allow_new = false, .max_news = 0};
    const auto e = enumerate_terms(empty);
    REQUIRE(e.size() == 1);
    CHECK(e[0] == Process::stop());
    CorpusSpec one = empty;
    one.max_prefixes = 1;
    CHECK(keys(enumerate_terms(one)) == keys({parse("0"), parse("a?() => 0"), parse("a!()")}));
  }

  TEST_CASE("corpus terms are canonical and distinct") {
    const auto terms = enumerate_terms(small_spec());
    CHECK(terms.size() == 606);
    CHECK(keys(terms).size() == terms.size());
    for (const auto& p : terms) CHECK(alpha_eq(canonical_form(p).term, p));
  }

  TEST_CASE("counts grow with every bound") {
    const CorpusSpec base{.name_alphabet_size = 1, .max_prefixes = 2, .max_arity = 0,
                          .max_parallel_width = 2, .allow_new = false, .max_news = 0};
    const std::size_t n0 = enumerate_terms(base).size();
    auto grown = [&](auto change) {
      CorpusSpec s = base;
      change(s);
      return enumerate_terms(s).size();
    };
    CHECK(grown([](CorpusSpec& s) { s.name_alphabet_size = 2; }) > n0);
    CHECK(grown([](CorpusSpec& s) { s.max_prefixes = 3; }) > n0);
    CHECK(grown([](CorpusSpec& s) { s.max_arity = 1; }) > n0);
    CHECK(grown([](CorpusSpec& s) { s.max_parallel_width = 3; }) >= n0);
    CHECK(grown([](CorpusSpec& s) { s.allow_new = true; s.max_news = 1; }) > n0);
  }

  TEST_CASE("raw enumeration") {
    CHECK(enumerate_raw(1, alphabet(1), 0, false, false).size() == 2);  // 0, a!()
    const auto two = enumerate_raw(2, alphabet(1), 0, true, true);
    CHECK(std::any_of(two.begin(), two.end(), [](const Process& p) { return p.tag() == Tag::kNew; }));
    CHECK(alphabet(3) == std::vector<Name>{Name("a"), Name("b"), Name("c")});
  }

  TEST_CASE("contexts") {
    const auto cs = enumerate_contexts(small_spec(), 2);
    CHECK(std::any_of(cs.begin(), cs.end(), [](const Context& c) { return c.size() == 1; }));
    for (const auto& c : cs) CHECK(c.size() <= 2);
    CHECK(enumerate_contexts(small_spec(), 3).size() > cs.size());
  }

  TEST_CASE("semantic barbs") {
    CHECK(semantic_barbs(translate_top(parse("x!(y)"))) == NameSet{Name("x")});
    CHECK(semantic_barbs(translate_top(parse("x?(y) => y!()"))).empty());
    CHECK(semantic_barbs(translate_top(parse("(new u)(u!(a) | z!(u))"))) == NameSet{Name("z")});
    CHECK(semantic_barbs(translate_top(parse("x!(y)"), 1, false)) == NameSet{Name("x")});
  }

  TEST_CASE("diagram lts") {
    DiagramLts lts(100);
    const auto s = lts.add(translate_top(parse("x?(y) => y!() | x!(u)")));
    CHECK(lts.lts().size() == 2);
    CHECK(lts.lts().successors[s].size() == 1);
    CHECK(lts.add(translate_top(parse("u!()"))) == lts.lts().successors[s][0]);
  }

  TEST_CASE("lemmas on the small corpus") {
    const CorpusSpec spec = small_spec();
    for (const auto& r : {verify_reduction_lemma(spec), verify_observation_lemma(spec),
                          verify_full_abstraction(spec, {.max_pair_terms = 60})}) {
      CAPTURE(r.lemma);
      CHECK(r.passed());
      CHECK(r.corpus_size > 0);
      CHECK(r.checks > 0);
      CHECK(format_table(r).find(r.lemma) != std::string::npos);
      CHECK(to_json(r).at("counterexamples").empty());
    }
  }

  TEST_CASE("contextual checks on a tiny corpus") {
    const CorpusSpec spec{.name_alphabet_size = 2, .max_prefixes = 1, .max_arity = 1,
                          .max_parallel_width = 2, .allow_new = true, .max_news = 1};
    CHECK(verify_functoriality(spec, 3).passed());
    CHECK(verify_contextual_congruence(spec, 2).passed());
  }

  TEST_CASE("parallel runs agree") {
    const CorpusSpec spec = small_spec();
    const auto a = verify_reduction_lemma(spec, {.jobs = 1});
    const auto b = verify_reduction_lemma(spec, {.jobs = 3});
    CHECK(a.checks == b.checks);
    CHECK(a.passed() == b.passed());
  }
}
