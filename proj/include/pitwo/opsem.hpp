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

#ifndef PITWO_OPSEM_HPP_
#define PITWO_OPSEM_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "pitwo/congruence.hpp"

namespace pitwo {

/// A communication between two top-level components of a canonical form.
struct Redex {
  Name subject;
  std::size_t sender_index = 0;    // output component
  std::size_t receiver_index = 0;  // input component
  std::size_t arity = 0;

  friend bool operator==(const Redex&, const Redex&) = default;
};

/// Redexes of canonical_form(p); indices refer to its `components`.
std::vector<Redex> find_redexes(const Process& p);
std::vector<Redex> find_redexes(const CanonicalProcess& c);

/// Fires `r` and returns the canonical reduct. Throws StaleRedex when `r`
/// does not describe a communication of `p`.
CanonicalProcess fire(const Process& p, const Redex& r);
CanonicalProcess fire(const CanonicalProcess& c, const Redex& r);

/// One reduct per redex, in redex order, without deduplication.
std::vector<CanonicalProcess> successors(const Process& p);
/// Distinct canonical reducts, sorted by key.
std::vector<CanonicalProcess> reduce_step(const Process& p);

struct ReductionGraph {
  std::vector<CanonicalProcess> states;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // sorted, unique
  std::size_t root = 0;
};

/// Breadth-first closure of reduce_step. Throws BudgetExceeded past
/// `max_states` states.
ReductionGraph reachable(const Process& p, std::size_t max_states);

nlohmann::json to_json(const ReductionGraph& g);

}  // namespace pitwo

#endif  // PITWO_OPSEM_HPP_
