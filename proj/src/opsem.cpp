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

#include "pitwo/opsem.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "pitwo/error.hpp"

namespace pitwo {

std::vector<Redex> find_redexes(const CanonicalProcess& c) {
  std::vector<Redex> out;
  const auto& comps = c.components;
  for (std::size_t s = 0; s < comps.size(); ++s) {
    if (comps[s].tag() != Tag::kOutput) continue;
    const auto& o = comps[s].as_output();
    for (std::size_t r = 0; r < comps.size(); ++r) {
      if (comps[r].tag() != Tag::kInput) continue;
      const auto& in = comps[r].as_input();
      if (in.subject == o.subject && in.params.size() == o.args.size()) {
        out.push_back({o.subject, s, r, o.args.size()});
      }
    }
  }
  return out;
}

std::vector<Redex> find_redexes(const Process& p) { return find_redexes(canonical_form(p)); }

CanonicalProcess fire(const CanonicalProcess& c, const Redex& r) {
  const auto& comps = c.components;
  if (r.sender_index >= comps.size() || r.receiver_index >= comps.size() ||
      r.sender_index == r.receiver_index) {
    throw StaleRedex("redex indices out of range");
  }
  const Process& sender = comps[r.sender_index];
  const Process& receiver = comps[r.receiver_index];
  if (sender.tag() != Tag::kOutput || receiver.tag() != Tag::kInput) {
    throw StaleRedex("redex does not pair an output with an input");
  }
  const auto& o = sender.as_output();
  const auto& in = receiver.as_input();
  if (o.subject != r.subject || in.subject != r.subject || o.args.size() != r.arity ||
      in.params.size() != r.arity) {
    throw StaleRedex("redex subject or arity does not match the term");
  }

  Substitution s;
  for (std::size_t i = 0; i < in.params.size(); ++i) s.emplace(in.params[i], o.args[i]);

  std::vector<Process> rest;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i != r.sender_index && i != r.receiver_index) rest.push_back(comps[i]);
  }
  rest.push_back(substitute(in.body, s));
  Process next = Process::par_all(rest);
  for (auto it = c.binders.rbegin(); it != c.binders.rend(); ++it) {
    next = Process::restrict(*it, next);
  }
  return canonical_form(next);
}

CanonicalProcess fire(const Process& p, const Redex& r) { return fire(canonical_form(p), r); }

std::vector<CanonicalProcess> successors(const Process& p) {
  auto c = canonical_form(p);
  std::vector<CanonicalProcess> out;
  for (const auto& r : find_redexes(c)) out.push_back(fire(c, r));
  return out;
}

std::vector<CanonicalProcess> reduce_step(const Process& p) {
  auto out = successors(p);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ReductionGraph reachable(const Process& p, std::size_t max_states) {
  ReductionGraph g;
  std::map<std::string, std::size_t> index;
  auto intern = [&](CanonicalProcess c) {
    auto [it, inserted] = index.emplace(c.key, g.states.size());
    if (inserted) {
      if (g.states.size() >= max_states) {
        throw BudgetExceeded("reachable state space exceeds " + std::to_string(max_states) +
                             " states");
      }
      g.states.push_back(std::move(c));
    }
    return std::pair{it->second, inserted};
  };
  g.root = intern(canonical_form(p)).first;
  std::deque<std::size_t> queue{g.root};
  while (!queue.empty()) {
    std::size_t s = queue.front();
    queue.pop_front();
    for (auto& next : reduce_step(g.states[s].term)) {
      auto [t, inserted] = intern(std::move(next));
      g.edges.emplace_back(s, t);
      if (inserted) queue.push_back(t);
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

nlohmann::json to_json(const ReductionGraph& g) {
  nlohmann::json states = nlohmann::json::array();
  for (const auto& s : g.states) states.push_back(print(s.term));
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [a, b] : g.edges) edges.push_back({a, b});
  return {{"states", states}, {"edges", edges}, {"root", g.root}};
}

}  // namespace pitwo
