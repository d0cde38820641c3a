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

#include "pitwo/bisim.hpp"

#include <algorithm>
#include <deque>

#include "pitwo/error.hpp"

namespace pitwo {
namespace {

void barbs_into(const Process& p, BarbSet& out) {
  switch (p.tag()) {
    case Tag::kOutput:
      out.insert(p.as_output().subject);
      return;
    case Tag::kPar:
      barbs_into(p.as_par().left, out);
      barbs_into(p.as_par().right, out);
      return;
    case Tag::kNew: {
      BarbSet inner;
      barbs_into(p.as_new().body, inner);
      inner.erase(p.as_new().binder);
      out.insert(inner.begin(), inner.end());
      return;
    }
    default:
      return;
  }
}

std::string describe(const BarbSet& s) {
  std::string out = "{";
  for (const auto& n : s) out += (out.size() > 1 ? "," : "") + n.str();
  return out + "}";
}

}  // namespace

BarbSet barbs(const Process& p) {
  BarbSet out;
  barbs_into(p, out);
  return out;
}

std::vector<std::size_t> coarsest_bisimulation(const Lts& lts) {
  const std::size_t n = lts.size();
  std::vector<std::size_t> block(n);
  std::size_t count = 0;
  {
    std::map<BarbSet, std::size_t> ids;
    for (const auto& o : lts.observations) ids.emplace(o, 0);
    for (auto& [o, id] : ids) id = count++;
    for (std::size_t i = 0; i < n; ++i) block[i] = ids.at(lts.observations[i]);
  }
  for (;;) {
    using Signature = std::pair<std::size_t, std::vector<std::size_t>>;
    std::vector<Signature> sig(n);
    for (std::size_t i = 0; i < n; ++i) {
      sig[i].first = block[i];
      for (std::size_t j : lts.successors[i]) sig[i].second.push_back(block[j]);
      auto& v = sig[i].second;
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    std::map<Signature, std::size_t> ids;
    for (const auto& s : sig) ids.emplace(s, 0);
    std::size_t next = 0;
    for (auto& [s, id] : ids) id = next++;
    for (std::size_t i = 0; i < n; ++i) block[i] = ids.at(sig[i]);
    if (next == count) break;
    count = next;
  }
  return block;
}

Lts saturate(const Lts& lts) {
  Lts out;
  for (std::size_t s = 0; s < lts.size(); ++s) {
    std::vector<bool> seen(lts.size(), false);
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    BarbSet obs;
    std::vector<std::size_t> reach;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      reach.push_back(u);
      obs.insert(lts.observations[u].begin(), lts.observations[u].end());
      for (std::size_t v : lts.successors[u]) {
        if (!seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
      }
    }
    std::sort(reach.begin(), reach.end());
    out.add_state(std::move(obs));
    out.successors.back() = std::move(reach);
  }
  return out;
}

std::size_t ProcessLts::intern(CanonicalProcess c, bool& fresh) {
  auto [it, inserted] = index_.emplace(c.key, states_.size());
  fresh = inserted;
  if (inserted) {
    if (states_.size() >= max_states_) {
      throw BudgetExceeded("bisimulation state space exceeds " + std::to_string(max_states_) +
                           " states");
    }
    lts_.add_state(barbs(c.term));
    states_.push_back(std::move(c));
  }
  return it->second;
}

std::size_t ProcessLts::add(const Process& p) {
  bool fresh = false;
  std::size_t root = intern(canonical_form(p), fresh);
  if (!fresh) return root;
  std::deque<std::size_t> queue{root};
  while (!queue.empty()) {
    std::size_t s = queue.front();
    queue.pop_front();
    std::vector<std::size_t> succ;
    for (auto& next : reduce_step(states_[s].term)) {
      std::size_t t = intern(std::move(next), fresh);
      succ.push_back(t);
      if (fresh) queue.push_back(t);
    }
    std::sort(succ.begin(), succ.end());
    lts_.successors[s] = std::move(succ);
  }
  return root;
}

BisimResult check_bisimilar(const Process& p, const Process& q, const BisimOptions& options) {
  ProcessLts graph(options.max_states);
  std::size_t a = graph.add(p);
  std::size_t b = graph.add(q);
  Lts lts = options.weak ? saturate(graph.lts()) : graph.lts();
  auto block = coarsest_bisimulation(lts);
  if (block[a] == block[b]) return {true, {}};

  auto show = [&](std::size_t s) { return print(graph.state(s).term); };
  const auto& oa = lts.observations[a];
  const auto& ob = lts.observations[b];
  if (oa != ob) {
    const char* arrow = options.weak ? " has weak barbs " : " has barbs ";
    return {false, show(a) + arrow + describe(oa) + " but " + show(b) + arrow + describe(ob)};
  }
  auto unmatched = [&](std::size_t from, std::size_t other) -> std::string {
    for (std::size_t s : lts.successors[from]) {
      bool matched = std::any_of(lts.successors[other].begin(), lts.successors[other].end(),
                                 [&](std::size_t t) { return block[t] == block[s]; });
      if (!matched) {
        return show(from) + (options.weak ? " ->* " : " -> ") + show(s) + " is not matched by " +
               show(other);
      }
    }
    return {};
  };
  std::string why = unmatched(a, b);
  if (why.empty()) why = unmatched(b, a);
  return {false, why};
}

bool bisimilar(const Process& p, const Process& q, const BisimOptions& options) {
  return check_bisimilar(p, q, options).bisimilar;
}

}  // namespace pitwo
