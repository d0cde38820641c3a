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

#ifndef PITWO_BISIM_HPP_
#define PITWO_BISIM_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "pitwo/opsem.hpp"

namespace pitwo {

using BarbSet = NameSet;

/// Names x with p ↓ x: unguarded outputs on names not restricted above them.
BarbSet barbs(const Process& p);

/// Unlabelled transition system with a set of observables per state.
struct Lts {
  std::vector<std::vector<std::size_t>> successors;
  std::vector<BarbSet> observations;

  std::size_t size() const { return successors.size(); }
  std::size_t add_state(BarbSet obs) {
    successors.emplace_back();
    observations.push_back(std::move(obs));
    return successors.size() - 1;
  }
};

/// Block index per state of the coarsest partition that is stable under
/// single moves and refines equality of observations (strong barbed
/// bisimilarity). Block numbering is deterministic.
std::vector<std::size_t> coarsest_bisimulation(const Lts& lts);

/// Reflexive-transitive closure of the moves, with observations extended
/// to everything reachable (weak barbs).
Lts saturate(const Lts& lts);

/// Reduction graphs of any number of roots, sharing states by canonical form.
class ProcessLts {
 public:
  explicit ProcessLts(std::size_t max_states) : max_states_(max_states) {}

  /// Adds the reachable graph of `p`; returns the state of its root.
  std::size_t add(const Process& p);

  const Lts& lts() const { return lts_; }
  const CanonicalProcess& state(std::size_t i) const { return states_[i]; }

 private:
  std::size_t intern(CanonicalProcess c, bool& fresh);

  std::size_t max_states_;
  Lts lts_;
  std::vector<CanonicalProcess> states_;
  std::map<std::string, std::size_t> index_;
};

struct BisimOptions {
  std::size_t max_states = 10000;
  /// Match moves with any number of moves and compare weak barbs.
  bool weak = false;
};

struct BisimResult {
  bool bisimilar = false;
  /// Empty when bisimilar; otherwise a distinguishing barb or an
  /// unmatched move.
  std::string certificate;
};

BisimResult check_bisimilar(const Process& p, const Process& q, const BisimOptions& options = {});
bool bisimilar(const Process& p, const Process& q, const BisimOptions& options = {});

}  // namespace pitwo

#endif  // PITWO_BISIM_HPP_
