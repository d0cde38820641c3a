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

#ifndef PITWO_HARNESS_HPP_
#define PITWO_HARNESS_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "pitwo/bisim.hpp"
#include "pitwo/rewrite.hpp"
#include "pitwo/translate.hpp"

namespace pitwo {

/// Bounds of an exhaustive corpus. Free names are drawn from the first
/// `name_alphabet_size` letters; binders never clash with them.
struct CorpusSpec {
  int name_alphabet_size = 2;
  int max_prefixes = 4;
  int max_arity = 1;
  int max_parallel_width = 4;
  bool allow_new = true;
  /// Restrictions per term.
  int max_news = 1;
};

/// 2 names, arity <= 1, up to two communicating pairs, width <= 4, one new.
CorpusSpec desk_spec();
/// Smaller corpus used for context sweeps.
CorpusSpec small_spec();

/// a, b, c, ...
std::vector<Name> alphabet(int size);

/// Every term within the bounds, one canonical representative per
/// congruence class, ordered by (size, canonical key).
std::vector<Process> enumerate_terms(const CorpusSpec& spec);

/// Every term with exactly `size` constructors over `names`, without any
/// deduplication. With `binders_from_names` binders reuse `names` (so
/// shadowing occurs); otherwise they are fresh.
std::vector<Process> enumerate_raw(std::size_t size, const std::vector<Name>& names,
                                   int max_arity, bool allow_new,
                                   bool binders_from_names);

/// Contexts of at most `max_size` constructors (hole included) whose parallel
/// siblings and prefixes use the corpus names and arities.
std::vector<Context> enumerate_contexts(const CorpusSpec& spec, std::size_t max_size);

/// Names x with ⟦p⟧ ⇓ ⟦x⟧: top-level outputs whose subject is a domain port
/// or a name constant (fresh subjects are not observable).
NameSet semantic_barbs(const TopDiagram& d);

/// Reachable comm_step graphs of top diagrams, states shared by diagram
/// equality, observations from semantic_barbs.
class DiagramLts {
 public:
  explicit DiagramLts(std::size_t max_states) : max_states_(max_states) {}
  std::size_t add(const TopDiagram& d);
  const Lts& lts() const { return lts_; }

 private:
  std::size_t max_states_;
  Lts lts_;
  std::map<std::string, std::size_t> index_;
};

struct Counterexample {
  std::vector<std::string> terms;
  std::string expected;
  std::string observed;
};

struct VerificationReport {
  std::string lemma;
  std::size_t corpus_size = 0;
  std::size_t checks = 0;
  std::vector<Counterexample> counterexamples;
  double elapsed_seconds = 0;

  bool passed() const { return counterexamples.empty(); }
};

nlohmann::json to_json(const VerificationReport& r);
std::string format_table(const VerificationReport& r);

struct VerifyOptions {
  int jobs = 1;
  std::size_t max_states = 100000;
  /// Full abstraction compares all pairs of at most this many terms.
  std::size_t max_pair_terms = 200;
  /// Seed for trimming; PITWO_SEED overrides when set.
  std::uint64_t seed = 20260101;
  std::size_t max_counterexamples = 20;
};

VerificationReport verify_reduction_lemma(const CorpusSpec& spec, const VerifyOptions& options = {});
VerificationReport verify_observation_lemma(const CorpusSpec& spec, const VerifyOptions& options = {});
VerificationReport verify_full_abstraction(const CorpusSpec& spec, const VerifyOptions& options = {});
/// (a) ⟦C⟧(⟦P⟧) = ⟦C[P]⟧ for every context and term; (b) the partitions of
/// the corpus by syntactic and by semantic contextual congruence coincide.
VerificationReport verify_contextual_congruence(const CorpusSpec& spec, std::size_t context_bound,
                                                const VerifyOptions& options = {});
/// Only part (a).
VerificationReport verify_functoriality(const CorpusSpec& spec, std::size_t context_bound,
                                        const VerifyOptions& options = {});

}  // namespace pitwo

#endif  // PITWO_HARNESS_HPP_
