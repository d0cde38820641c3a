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

#ifndef PITWO_TESTS_SUPPORT_ORACLES_HPP_
#define PITWO_TESTS_SUPPORT_ORACLES_HPP_

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pitwo/diagram.hpp"
#include "pitwo/syntax.hpp"

namespace pitwo::testing {

/// Renames every binder apart from everything in sight, then replaces free
/// occurrences textually.
Process naive_substitute(const Process& p, const Substitution& s);

/// Barbs straight from the three observation rules.
NameSet naive_barbs(const Process& p);

/// All terms reachable by axiom steps (size-non-increasing directions).
std::vector<Process> axiom_closure(const Process& p, std::size_t cap = 200000);

/// Reducts by the Comm, Par and New rules applied to every member of the
/// axiom closure, as canonical keys.
std::set<std::string> naive_reduct_keys(const Process& p);

/// Greatest fixpoint of the barbed-bisimulation functional, computed
/// over explicit pairs on the naive state spaces of p and q.
bool naive_bisimilar(const Process& p, const Process& q, std::size_t max_states = 2000);

/// Random term over `names` with roughly `size` constructors.
Process random_term(std::mt19937_64& rng, const std::vector<Name>& names, int size, int max_arity = 2);

/// Same diagram with node ids shuffled.
Diagram shuffle_nodes(const Diagram& d, std::mt19937_64& rng);

}  // namespace pitwo::testing

#endif  // PITWO_TESTS_SUPPORT_ORACLES_HPP_
