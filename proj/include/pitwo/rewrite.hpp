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

#ifndef PITWO_REWRITE_HPP_
#define PITWO_REWRITE_HPP_

#include <vector>

#include "pitwo/diagram.hpp"
#include "pitwo/translate.hpp"

namespace pitwo {

/// An occurrence of the source of comm_n on the top-level 𝒫 spine.
struct DiagramRedex {
  int output_node = 0;
  int input_node = 0;
  int catalyst = 0;
  int arity = 0;
  /// Common name source of both subjects, reached through Dup fans.
  Endpoint subject_root;

  friend bool operator==(const DiagramRedex&, const DiagramRedex&) = default;
};

/// Components of the top-level parallel composition feeding the codomain.
std::vector<Endpoint> spine(const Diagram& d);
/// Follows a name wire upstream through Dup nodes.
Endpoint name_root(const Diagram& d, Endpoint e);

/// Expects a normalized diagram. Empty when no catalyst is on the spine.
std::vector<DiagramRedex> find_diagram_redexes(const Diagram& d);
std::vector<DiagramRedex> find_diagram_redexes(const TopDiagram& d);

/// Fires comm_n and normalizes. Throws StaleRedex.
Diagram apply_comm(const Diagram& d, const DiagramRedex& r);
TopDiagram apply_comm(const TopDiagram& d, const DiagramRedex& r);

/// Distinct (under diagram equality) results of single firings, sorted
/// by canonical key.
std::vector<Diagram> comm_step(const Diagram& d);
std::vector<TopDiagram> comm_step(const TopDiagram& d);

struct ConcurrentStep {
  std::vector<DiagramRedex> redexes;
  Diagram result;
};

/// Maximal sets of pairwise node-disjoint redexes, at most min(k, number of
/// catalysts) each, fired jointly with distinct catalysts. Deduplicated by
/// result.
std::vector<ConcurrentStep> concurrent_step(const Diagram& d, int k);

}  // namespace pitwo

#endif  // PITWO_REWRITE_HPP_
