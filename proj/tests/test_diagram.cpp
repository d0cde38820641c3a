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
#include "pitwo/diagram.hpp"
#include "pitwo/error.hpp"
#include "pitwo/translate.hpp"
#include "support/oracles.hpp"

using namespace pitwo;

namespace {
const PortType N = PortType::name();
const PortType P = PortType::proc();

Diagram gen(Gen g, int arity = 0, std::string label = {}) { return Diagram::generator(g, arity, std::move(label)); }
Diagram id(std::vector<PortType> ts) { return Diagram::identity(ts); }
Diagram par2() { return gen(Gen::kPar, 2); }
Diagram dup2() { return gen(Gen::kDup, 2); }
}  // namespace

TEST_SUITE("diagram") {
  TEST_CASE("object expressions") {
    CHECK(ObjectExpr::unit().to_string() == "I");
    CHECK(ObjectExpr::tensor(ObjectExpr::name(), ObjectExpr::proc()).to_string() == "N (x) P");
    CHECK(ObjectExpr::tensor(ObjectExpr::unit(), ObjectExpr::name()) == ObjectExpr::name());
    CHECK(PortType::hom(0).to_string() == "I -o P");
    CHECK(PortType::hom(1).to_string() == "N -o P");
    CHECK(PortType::hom(2).to_string() == "N^2 -o P");
  }

  TEST_CASE("generator interfaces") {
    CHECK(gen(Gen::kInput, 2).domain() == std::vector<PortType>{N, PortType::hom(2)});
    CHECK(gen(Gen::kOutput, 2).domain() == std::vector<PortType>{N, N, N});
    CHECK(gen(Gen::kEv, 1).codomain() == std::vector<PortType>{P});
    CHECK(gen(Gen::kFresh).domain().empty());
    CHECK(dup2().codomain().size() == 2);
    CHECK_THROWS(gen(Gen::kCurry, 1));
    CHECK_THROWS(gen(Gen::kParam));
  }

  TEST_CASE("composition and tensor") {
    const Diagram f = translate(parse("x!(y) | x?(z) => z!()"));
    CHECK(equal(compose(f, id({P})), f));
    CHECK(equal(compose(id(f.domain()), f), f));
    const Diagram loop = compose(gen(Gen::kNameConst, 0, "x"), gen(Gen::kDrop));
    CHECK(loop.domain().empty());
    CHECK(loop.codomain().empty());
    CHECK(normalize(loop, {.scalar_gc = false}).nodes().size() == 2);
    CHECK(normalize(loop).nodes().empty());
    CHECK(equal(compose(tensor(gen(Gen::kZero), gen(Gen::kZero)), par2()), translate(parse("0 | 0"))));
    CHECK(tensor(Diagram(), Diagram()).nodes().empty());
    const Diagram t = tensor(gen(Gen::kDrop), gen(Gen::kZero));
    CHECK(t.domain() == std::vector<PortType>{N});
    CHECK(t.codomain() == std::vector<PortType>{P});
    CHECK_THROWS_AS(compose(gen(Gen::kZero), gen(Gen::kZero)), InterfaceMismatch);
  }

  TEST_CASE("symmetry is natural") {
    const Diagram f = gen(Gen::kOutput, 0);
    const Diagram g = compose(dup2(), gen(Gen::kOutput, 1));
    CHECK(equal(compose(tensor(f, g), Diagram::swap(P, P)), compose(Diagram::swap(N, N), tensor(g, f))));
    CHECK_FALSE(equal(tensor(f, g), tensor(g, f)));
    CHECK(equal(compose(Diagram::swap(N, N), Diagram::swap(N, N)), id({N, N})));
  }

  TEST_CASE("parallel is a commutative monoid") {
    const Diagram left = compose(tensor(par2(), id({P})), par2());
    const Diagram right = compose(tensor(id({P}), par2()), par2());
    const Diagram flat = gen(Gen::kPar, 3);
    const Diagram swapped = compose(tensor(Diagram::swap(P, P), id({P})), left);
    const Diagram swapped2 = compose(tensor(id({P}), Diagram::swap(P, P)), right);
    const Diagram comm_inner = compose(tensor(compose(Diagram::swap(P, P), par2()), id({P})), par2());
    const Diagram with_unit = compose(tensor(tensor(id({P}), gen(Gen::kZero)), id({P, P})),
                                      compose(tensor(par2(), par2()), par2()));
    const Diagram unit_left = compose(tensor(gen(Gen::kZero), id({P})), par2());
    for (const Diagram* d : {&left, &right, &swapped, &swapped2, &comm_inner, &with_unit})
      CHECK(canonical_key(*d) == canonical_key(flat));
    CHECK(equal(unit_left, id({P})));
    CHECK(equal(compose(Diagram::swap(P, P), par2()), par2()));
    CHECK_FALSE(equal(par2(), flat));
  }

  TEST_CASE("dup is a cocommutative comonoid") {
    const Diagram left = compose(dup2(), tensor(dup2(), id({N})));
    const Diagram right = compose(dup2(), tensor(id({N}), dup2()));
    const Diagram flat = gen(Gen::kDup, 3);
    const Diagram swapped = compose(left, tensor(Diagram::swap(N, N), id({N})));
    const Diagram swapped2 = compose(right, tensor(id({N}), Diagram::swap(N, N)));
    for (const Diagram* d : {&left, &right, &swapped, &swapped2}) CHECK(canonical_key(*d) == canonical_key(flat));
    CHECK(equal(compose(dup2(), Diagram::swap(N, N)), dup2()));
    CHECK(equal(compose(dup2(), tensor(gen(Gen::kDrop), id({N}))), id({N})));
    CHECK(equal(compose(dup2(), tensor(id({N}), gen(Gen::kDrop))), id({N})));
    const Diagram counit3 = compose(flat, tensor(tensor(id({N}), gen(Gen::kDrop)), id({N})));
    CHECK(equal(counit3, dup2()));
    const Diagram all_dropped = compose(flat, tensor(tensor(gen(Gen::kDrop), gen(Gen::kDrop)), gen(Gen::kDrop)));
    CHECK(equal(all_dropped, gen(Gen::kDrop)));
  }

  TEST_CASE("scalars vanish") {
    const Diagram d = translate(parse("a!(b)"));
    const Diagram scalar = compose(gen(Gen::kNameConst, 0, "x"), gen(Gen::kDrop));
    CHECK(equal(tensor(scalar, d), d));
    CHECK_FALSE(equal(tensor(scalar, d), d, {.scalar_gc = false}));
  }

  TEST_CASE("curry and ev") {
    const Diagram body = translate(parse("y!()"));
    const Diagram box = curry(1, body);
    CHECK(box.domain().empty());
    CHECK(box.codomain() == std::vector<PortType>{PortType::hom(1)});
    CHECK(equal(compose(tensor(id({N}), box), gen(Gen::kInput, 1)), translate(parse("x?(y) => y!()"))));
    const Diagram applied = apply_ev(box, gen(Gen::kNameConst, 0, "u"));
    CHECK(equal(applied, compose(gen(Gen::kNameConst, 0, "u"), translate(parse("u!()")))));
    CHECK(normalize(applied).count(Gen::kEv) == 0);
    const Diagram stop = translate(Process::stop());
    CHECK(equal(apply_ev(curry(0, stop), Diagram()), stop));
    const Diagram opaque = apply_ev(id({PortType::hom(1)}), id({N}));
    CHECK(normalize(opaque).count(Gen::kEv) == 1);
    CHECK_THROWS_AS(curry(1, gen(Gen::kZero)), InterfaceMismatch);
    CHECK_THROWS_AS(curry(0, gen(Gen::kDup)), InterfaceMismatch);
    CHECK_THROWS_AS(apply_ev(box, Diagram()), InterfaceMismatch);
  }

  TEST_CASE("captured names cross the box") {
    const Diagram d = translate(parse("x?(y) => z!(y)"), {Name("x"), Name("z")});
    const Diagram box = curry(1, translate(parse("y!(z)"), {Name("y"), Name("z")}));
    CHECK(box.domain() == std::vector<PortType>{N});
    CHECK(check_well_formed(d).empty());
  }

  TEST_CASE("well-formedness") {
    CHECK(check_well_formed(translate(parse("(new a)(a!(b) | a?(c) => c!(c))"))).empty());
    Diagram bad({N}, {P});
    Node o{Gen::kOutput, 1, {}, kBoundary, {{kBoundary, 0}, {kBoundary, 0}}};
    bad.set_output(0, {bad.add_node(o), 0});
    CHECK_FALSE(check_well_formed(bad).empty());
    Diagram dangling({}, {P});
    CHECK_FALSE(check_well_formed(dangling).empty());
  }

  TEST_CASE("canonical labels ignore node order") {
    std::mt19937_64 rng(13);
    const std::vector<Name> names{Name("a"), Name("b")};
    for (int i = 0; i < 200; ++i) {
      const Process p = testing::random_term(rng, names, 1 + static_cast<int>(rng() % 8));
      const Diagram d = translate(p);
      const Diagram s = testing::shuffle_nodes(d, rng);
      CAPTURE(print(p));
      REQUIRE(check_well_formed(s).empty());
      CHECK(canonical_labeling(d).encoding == canonical_labeling(s).encoding);
      CHECK(canonical_key(d) == canonical_key(s));
      CHECK(canonical_hash(d) == canonical_hash(s));
      CHECK(to_dot(d) == to_dot(s));
      CHECK(to_json(d) == to_json(s));
    }
  }

  TEST_CASE("equality") {
    const Diagram d = translate(parse("a?(x) => x!() | b!()"));
    CHECK(equal(d, d));
    CHECK(equal(translate(parse("a!() | b?() => 0")), translate(parse("b?() => 0 | a!()"))));
    CHECK_FALSE(equal(translate(parse("x!()"), {Name("x"), Name("y")}),
                      translate(parse("y!()"), {Name("x"), Name("y")})));
    CHECK_FALSE(equal(translate(parse("x!()")), translate(parse("x?() => 0"))));
  }

  TEST_CASE("exports") {
    const Diagram d = normalize(translate(parse("(new a) a?(x) => b!(x)")));
    const auto j = to_json(d);
    CHECK(j.at("domain").size() == 1);
    CHECK(j.at("nodes").size() == d.nodes().size());
    const std::string dot = to_dot(d);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("cluster") != std::string::npos);
  }
}
