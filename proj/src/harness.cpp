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

#include "pitwo/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <iomanip>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "pitwo/error.hpp"

namespace pitwo {

namespace {

// Runs f(0..n-1) on up to `jobs` workers; results keep index order.
template <typename F>
auto parallel_map(std::size_t n, int jobs, F f) -> std::vector<decltype(f(std::size_t{0}))> {
  std::vector<decltype(f(std::size_t{0}))> out(n);
  if (jobs <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  const auto count = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
  for (std::size_t w = 0; w < count; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) {
        try {
          out[i] = f(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::string key_of(const Diagram& d) { return canonical_labeling(d).encoding; }

std::string render(const NameSet& s) {
  std::string out = "{";
  for (const auto& n : s) out += (out.size() > 1 ? "," : "") + n.str();
  return out + "}";
}

std::string render(const std::vector<std::string>& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
  return out + "}";
}

std::string short_hash(const std::string& key) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return "diagram#" + os.str().substr(0, 8);
}

// Keys of the distinct results of single comm firings.
std::set<std::string> comm_keys(const Diagram& d) {
  std::set<std::string> keys;
  for (const auto& r : find_diagram_redexes(d)) keys.insert(key_of(apply_comm(d, r)));
  return keys;
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

VerificationReport finish(std::string lemma, std::size_t corpus, std::size_t checks,
                          std::vector<std::optional<Counterexample>> found,
                          const VerifyOptions& options, const Timer& t) {
  VerificationReport r;
  r.lemma = std::move(lemma);
  r.corpus_size = corpus;
  r.checks = checks;
  for (auto& c : found)
    if (c && r.counterexamples.size() < options.max_counterexamples)
      r.counterexamples.push_back(std::move(*c));
  r.elapsed_seconds = t.seconds();
  return r;
}

std::uint64_t effective_seed(const VerifyOptions& options) {
  if (const char* env = std::getenv("PITWO_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
    }
  }
  return options.seed;
}

std::vector<Process> trimmed(std::vector<Process> corpus, const VerifyOptions& options) {
  if (corpus.size() <= options.max_pair_terms) return corpus;
  std::vector<std::size_t> idx(corpus.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::mt19937_64 rng(effective_seed(options));
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(options.max_pair_terms);
  std::sort(idx.begin(), idx.end());
  std::vector<Process> out;
  for (auto i : idx) out.push_back(corpus[i]);
  return out;
}

// Counterexamples for pairs whose verdicts differ between two partitions.
std::vector<std::optional<Counterexample>> compare_partitions(
    const std::vector<Process>& terms, const std::vector<std::size_t>& syntactic,
    const std::vector<std::size_t>& semantic, const VerifyOptions& options, std::size_t& checks) {
  std::vector<std::optional<Counterexample>> found;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      ++checks;
      const bool syn = syntactic[i] == syntactic[j];
      const bool sem = semantic[i] == semantic[j];
      if (syn == sem) continue;
      if (found.size() < options.max_counterexamples)
        found.push_back(Counterexample{{print(terms[i]), print(terms[j])},
                                       syn ? "equivalent" : "distinguished",
                                       sem ? "equivalent" : "distinguished"});
      else
        found.emplace_back();
    }
  }
  return found;
}

}  // namespace

NameSet semantic_barbs(const TopDiagram& top) {
  const Diagram& d = top.diagram;
  NameSet out;
  for (const auto& c : spine(d)) {
    if (c.node == kBoundary) continue;
    const Node& n = d.node(c.node);
    if (n.parent != kBoundary || n.kind != Gen::kOutput) continue;
    const Endpoint root = name_root(d, n.inputs[0]);
    if (root.node == kBoundary) {
      out.insert(top.free_names.at(static_cast<std::size_t>(root.port)));
    } else if (d.node(root.node).kind == Gen::kNameConst) {
      out.insert(Name(d.node(root.node).label));
    }
  }
  return out;
}

std::size_t DiagramLts::add(const TopDiagram& d) {
  auto intern = [&](const TopDiagram& t, std::string key, bool& fresh) {
    auto [it, inserted] = index_.emplace(std::move(key), lts_.size());
    fresh = inserted;
    if (inserted) {
      if (lts_.size() >= max_states_)
        throw BudgetExceeded("diagram state space exceeds " + std::to_string(max_states_) +
                             " states");
      lts_.add_state(semantic_barbs(t));
    }
    return it->second;
  };
  bool fresh = false;
  const std::size_t root = intern(d, key_of(d.diagram), fresh);
  if (!fresh) return root;
  std::vector<std::pair<std::size_t, TopDiagram>> work{{root, d}};
  while (!work.empty()) {
    auto [id, t] = std::move(work.back());
    work.pop_back();
    std::set<std::size_t> succ;
    for (const auto& r : find_diagram_redexes(t.diagram)) {
      TopDiagram next = t;
      next.diagram = apply_comm(t.diagram, r);
      bool is_new = false;
      std::size_t s = intern(next, key_of(next.diagram), is_new);
      succ.insert(s);
      if (is_new) work.emplace_back(s, std::move(next));
    }
    lts_.successors[id].assign(succ.begin(), succ.end());
  }
  return root;
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["lemma"] = r.lemma;
  j["corpus_size"] = r.corpus_size;
  j["checks"] = r.checks;
  j["passed"] = r.passed();
  j["elapsed_seconds"] = r.elapsed_seconds;
  auto ces = nlohmann::json::array();
  for (const auto& c : r.counterexamples)
    ces.push_back({{"terms", c.terms}, {"expected", c.expected}, {"observed", c.observed}});
  j["counterexamples"] = ces;
  return j;
}

std::string format_table(const VerificationReport& r) {
  std::ostringstream os;
  os << std::left;
  os << std::setw(10) << "lemma" << r.lemma << "\n";
  os << std::setw(10) << "corpus" << r.corpus_size << " terms\n";
  os << std::setw(10) << "checks" << r.checks << "\n";
  os << std::setw(10) << "result" << (r.passed() ? "PASS" : "FAIL") << " ("
     << r.counterexamples.size() << " counterexamples)\n";
  os << std::setw(10) << "elapsed" << std::fixed << std::setprecision(2) << r.elapsed_seconds
     << " s\n";
  for (const auto& c : r.counterexamples) {
    os << "  terms:    " << render(c.terms) << "\n";
    os << "  expected: " << c.expected << "\n";
    os << "  observed: " << c.observed << "\n";
  }
  return os.str();
}

VerificationReport verify_reduction_lemma(const CorpusSpec& spec, const VerifyOptions& options) {
  Timer t;
  const auto corpus = enumerate_terms(spec);
  auto found = parallel_map(corpus.size(), options.jobs, [&](std::size_t i) {
    const Process& p = corpus[i];
    std::map<std::string, std::string> expected;
    for (const auto& q : reduce_step(p))
      expected.emplace(key_of(translate_top(q.term).diagram), print(q.term));
    const auto observed = comm_keys(translate_top(p).diagram);
    std::set<std::string> want;
    for (const auto& [k, v] : expected) want.insert(k);
    if (want == observed) return std::optional<Counterexample>{};
    std::vector<std::string> exp, obs;
    for (const auto& [k, v] : expected) exp.push_back(v);
    for (const auto& k : observed) {
      auto it = expected.find(k);
      obs.push_back(it == expected.end() ? short_hash(k) : it->second);
    }
    return std::optional<Counterexample>{Counterexample{{print(p)}, render(exp), render(obs)}};
  });
  return finish("reduction", corpus.size(), corpus.size(), std::move(found), options, t);
}

VerificationReport verify_observation_lemma(const CorpusSpec& spec, const VerifyOptions& options) {
  Timer t;
  const auto corpus = enumerate_terms(spec);
  auto found = parallel_map(corpus.size(), options.jobs, [&](std::size_t i) {
    const Process& p = corpus[i];
    const auto syn = barbs(p);
    const auto sem = semantic_barbs(translate_top(p));
    if (syn == sem) return std::optional<Counterexample>{};
    return std::optional<Counterexample>{Counterexample{{print(p)}, render(syn), render(sem)}};
  });
  return finish("observation", corpus.size(), corpus.size(), std::move(found), options, t);
}

VerificationReport verify_full_abstraction(const CorpusSpec& spec, const VerifyOptions& options) {
  Timer t;
  const auto terms = trimmed(enumerate_terms(spec), options);
  ProcessLts syntactic(options.max_states);
  DiagramLts semantic(options.max_states);
  std::vector<std::size_t> syn_root, sem_root;
  for (const auto& p : terms) {
    syn_root.push_back(syntactic.add(p));
    sem_root.push_back(semantic.add(translate_top(p)));
  }
  const auto syn_blocks = coarsest_bisimulation(syntactic.lts());
  const auto sem_blocks = coarsest_bisimulation(semantic.lts());
  std::vector<std::size_t> syn, sem;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    syn.push_back(syn_blocks[syn_root[i]]);
    sem.push_back(sem_blocks[sem_root[i]]);
  }
  std::size_t checks = 0;
  auto found = compare_partitions(terms, syn, sem, options, checks);
  return finish("fullabstraction", terms.size(), checks, std::move(found), options, t);
}

VerificationReport verify_functoriality(const CorpusSpec& spec, std::size_t context_bound,
                                        const VerifyOptions& options) {
  Timer t;
  const auto corpus = enumerate_terms(spec);
  const auto contexts = enumerate_contexts(spec, context_bound);
  std::vector<std::vector<Name>> fns;
  std::vector<Diagram> translated;
  for (const auto& p : corpus) {
    auto fn = free_names(p);
    fns.emplace_back(fn.begin(), fn.end());
    translated.push_back(translate(p));
  }
  auto found = parallel_map(contexts.size(), options.jobs, [&](std::size_t c) {
    std::map<std::vector<Name>, DiagramContext> by_interface;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      auto it = by_interface.find(fns[i]);
      if (it == by_interface.end())
        it = by_interface.emplace(fns[i], translate_context(contexts[c], fns[i])).first;
      const Diagram lhs = plug(it->second, translated[i]);
      const Diagram rhs = translate(contexts[c].plug(corpus[i]));
      if (lhs.domain() == rhs.domain() && canonical_key(lhs) == canonical_key(rhs)) continue;
      return std::optional<Counterexample>{Counterexample{
          {contexts[c].print(), print(corpus[i])},
          short_hash(canonical_key(rhs)) + " (translate after plugging)",
          short_hash(canonical_key(lhs)) + " (plugging after translating)"}};
    }
    return std::optional<Counterexample>{};
  });
  return finish("functoriality", corpus.size(), corpus.size() * contexts.size(),
                std::move(found), options, t);
}

VerificationReport verify_contextual_congruence(const CorpusSpec& spec, std::size_t context_bound,
                                                const VerifyOptions& options) {
  Timer t;
  VerificationReport functorial = verify_functoriality(spec, context_bound, options);

  const auto terms = trimmed(enumerate_terms(spec), options);
  const auto contexts = enumerate_contexts(spec, context_bound);
  const auto names = alphabet(spec.name_alphabet_size);
  std::vector<Diagram> open;
  for (const auto& p : terms) open.push_back(translate(p, names));

  ProcessLts syntactic(options.max_states);
  DiagramLts semantic(options.max_states);
  // Per term, the block of C[P] for every context C.
  std::vector<std::vector<std::size_t>> syn_states(terms.size()), sem_states(terms.size());
  for (const auto& c : contexts) {
    const auto dc = translate_context(c, names);
    for (std::size_t i = 0; i < terms.size(); ++i) {
      syn_states[i].push_back(syntactic.add(c.plug(terms[i])));
      sem_states[i].push_back(
          semantic.add(close_top(plug(dc, open[i]), dc.free_names, 1, true)));
    }
  }
  const auto syn_blocks = coarsest_bisimulation(syntactic.lts());
  const auto sem_blocks = coarsest_bisimulation(semantic.lts());
  auto classes = [](const std::vector<std::vector<std::size_t>>& states,
                    const std::vector<std::size_t>& blocks) {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    std::vector<std::size_t> out;
    for (const auto& row : states) {
      std::vector<std::size_t> sig;
      for (auto s : row) sig.push_back(blocks[s]);
      out.push_back(ids.emplace(sig, ids.size()).first->second);
    }
    return out;
  };
  std::size_t checks = functorial.checks;
  auto found = compare_partitions(terms, classes(syn_states, syn_blocks),
                                  classes(sem_states, sem_blocks), options, checks);
  std::vector<std::optional<Counterexample>> all;
  for (auto& c : functorial.counterexamples) all.emplace_back(std::move(c));
  for (auto& c : found) all.push_back(std::move(c));
  return finish("congruence", terms.size(), checks, std::move(all), options, t);
}

}  // namespace pitwo
