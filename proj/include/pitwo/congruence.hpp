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

#ifndef PITWO_CONGRUENCE_HPP_
#define PITWO_CONGRUENCE_HPP_

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "pitwo/syntax.hpp"

namespace pitwo {

struct CongruenceOptions {
  /// Also delete restrictions that stand alone at their scope level,
  /// i.e. assume (new x)P == P whenever x is not free in P.
  bool gc_vacuous = false;
};

/// Normal form of a structural congruence class.
///
/// At every scope level the restrictions are hoisted outermost and the
/// parallel components are flattened and sorted. Vacuous restrictions are
/// removed as long as another restriction stays at the same level. Binders
/// are renamed n0, n1, ... in traversal order, skipping the free names.
struct CanonicalProcess {
  Process term;
  /// Alpha-invariant rendering of the normal form; equal keys iff congruent.
  std::string key;
  /// Top-level restrictions, outermost first, as named in `term`.
  std::vector<Name> binders;
  /// Top-level parallel components (inputs and outputs), in canonical order.
  std::vector<Process> components;

  friend bool operator==(const CanonicalProcess& a, const CanonicalProcess& b) {
    return a.key == b.key;
  }
  friend auto operator<=>(const CanonicalProcess& a, const CanonicalProcess& b) {
    return a.key <=> b.key;
  }
};

CanonicalProcess canonical_form(const Process& p, const CongruenceOptions& options = {});
bool congruent(const Process& p, const Process& q, const CongruenceOptions& options = {});

/// Every term obtained from `p` by one application of a structural axiom
/// at one position. Only the size-preserving or size-reducing direction of
/// each axiom is taken, so closures are finite.
std::vector<Process> axiom_steps(const Process& p);

/// Bounded search: true iff the axiom closures of `p` and `q`, each explored
/// to `depth` steps, share a term up to alpha-equivalence.
bool oracle_congruent(const Process& p, const Process& q, int depth);

/// Saturated axiom closure over many terms, merged with union-find.
class CongruenceClosure {
 public:
  /// Explores the closure of `p` and returns its state index.
  std::size_t add(const Process& p);
  /// Representative of the class containing `state`.
  std::size_t class_of(std::size_t state);
  std::size_t state_count() const { return parent_.size(); }

 private:
  std::size_t intern(const std::string& key, bool& fresh);
  void unite(std::size_t a, std::size_t b);

  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::size_t> parent_;
};

}  // namespace pitwo

#endif  // PITWO_CONGRUENCE_HPP_
