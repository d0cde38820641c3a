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

#include "support/oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>

#include "pitwo/congruence.hpp"

namespace pitwo::testing {

namespace {

Process rename(const Process& p, const std::map<Name, Name>& env, int& counter) {
  auto look = [&](const Name& x) {
    auto it = env.find(x);
    return it == env.end() ? x : it->second;
  };
  switch (p.tag()) {
    case Tag::kStop:
      return p;
    case Tag::kOutput: {
      std::vector<Name> args;
      for (const auto& a : p.as_output().args) args.push_back(look(a));
      return Process::output(look(p.as_output().subject), args);
    }
    case Tag::kInput: {
      auto inner = env;
      std::vector<Name> params;
      for (const auto& y : p.as_input().params) {
        Name fresh("zz" + std::to_string(counter++));
        inner[y] = fresh;
        params.push_back(fresh);
      }
      return Process::input(look(p.as_input().subject), params,
                            rename(p.as_input().body, inner, counter));
    }
    case Tag::kNew: {
      auto inner = env;
      Name fresh("zz" + std::to_string(counter++));
      inner[p.as_new().binder] = fresh;
      return Process::restrict(fresh, rename(p.as_new().body, inner, counter));
    }
    case Tag::kPar:
      return Process::par(rename(p.as_par().left, env, counter),
                          rename(p.as_par().right, env, counter));
  }
  return p;
}

void reducts(const Process& t, std::vector<Process>& out) {
  switch (t.tag()) {
    case Tag::kPar: {
      const auto& l = t.as_par().left;
      const auto& r = t.as_par().right;
      for (int flip = 0; flip < 2; ++flip) {
        const Process& o = flip ? r : l;
        const Process& i = flip ? l : r;
        if (o.tag() == Tag::kOutput && i.tag() == Tag::kInput &&
            o.as_output().subject == i.as_input().subject &&
            o.as_output().args.size() == i.as_input().params.size()) {
          Substitution s;
          for (std::size_t k = 0; k < o.as_output().args.size(); ++k)
            s[i.as_input().params[k]] = o.as_output().args[k];
          out.push_back(naive_substitute(i.as_input().body, s));
        }
      }
      std::vector<Process> sub;
      reducts(l, sub);
      for (const auto& x : sub) out.push_back(Process::par(x, r));
      sub.clear();
      reducts(r, sub);
      for (const auto& x : sub) out.push_back(Process::par(l, x));
      break;
    }
    case Tag::kNew: {
      std::vector<Process> sub;
      reducts(t.as_new().body, sub);
      for (const auto& x : sub) out.push_back(Process::restrict(t.as_new().binder, x));
      break;
    }
    default:
      break;
  }
}

}  // namespace

Process naive_substitute(const Process& p, const Substitution& s) {
  // Binders become zz<k>; nothing else in the tests is spelled that way.
  int counter = 0;
  Process apart = rename(p, {}, counter);
  const std::map<Name, Name>& env = s;
  // Every binder is now a zz name absent from `s`, so only free
  // occurrences get replaced.
  std::function<Process(const Process&)> go = [&](const Process& q) -> Process {
    auto look = [&](const Name& x) {
      auto it = env.find(x);
      return it == env.end() ? x : it->second;
    };
    switch (q.tag()) {
      case Tag::kStop:
        return q;
      case Tag::kOutput: {
        std::vector<Name> args;
        for (const auto& a : q.as_output().args) args.push_back(look(a));
        return Process::output(look(q.as_output().subject), args);
      }
      case Tag::kInput:
        return Process::input(look(q.as_input().subject), q.as_input().params,
                              go(q.as_input().body));
      case Tag::kNew:
        return Process::restrict(q.as_new().binder, go(q.as_new().body));
      case Tag::kPar:
        return Process::par(go(q.as_par().left), go(q.as_par().right));
    }
    return q;
  };
  return go(apart);
}

NameSet naive_barbs(const Process& p) {
  switch (p.tag()) {
    case Tag::kOutput:
      return {p.as_output().subject};
    case Tag::kPar: {
      auto a = naive_barbs(p.as_par().left);
      auto b = naive_barbs(p.as_par().right);
      a.insert(b.begin(), b.end());
      return a;
    }
    case Tag::kNew: {
      auto a = naive_barbs(p.as_new().body);
      a.erase(p.as_new().binder);
      return a;
    }
    default:
      return {};
  }
}

std::vector<Process> axiom_closure(const Process& p, std::size_t cap) {
  std::map<std::string, Process> seen{{alpha_key(p), p}};
  std::deque<Process> work{p};
  while (!work.empty() && seen.size() < cap) {
    Process t = work.front();
    work.pop_front();
    for (const auto& n : axiom_steps(t))
      if (seen.emplace(alpha_key(n), n).second) work.push_back(n);
  }
  std::vector<Process> out;
  for (auto& [k, t] : seen) out.push_back(t);
  return out;
}

std::set<std::string> naive_reduct_keys(const Process& p) {
  std::set<std::string> keys;
  for (const auto& t : axiom_closure(p)) {
    std::vector<Process> rs;
    reducts(t, rs);
    for (const auto& r : rs) keys.insert(canonical_form(r).key);
  }
  return keys;
}

bool naive_bisimilar(const Process& p, const Process& q, std::size_t max_states) {
  std::map<std::string, std::size_t> index;
  std::vector<Process> states;
  std::vector<std::vector<std::size_t>> succ;
  auto intern = [&](const Process& t) {
    auto c = canonical_form(t);
    auto [it, fresh] = index.emplace(c.key, states.size());
    if (fresh) {
      states.push_back(c.term);
      succ.emplace_back();
    }
    return it->second;
  };
  const std::size_t sp = intern(p);
  const std::size_t sq = intern(q);
  for (std::size_t i = 0; i < states.size() && states.size() <= max_states; ++i) {
    std::set<std::size_t> out;
    for (const auto& t : axiom_closure(states[i])) {
      std::vector<Process> rs;
      reducts(t, rs);
      for (const auto& r : rs) out.insert(intern(r));
    }
    succ[i].assign(out.begin(), out.end());
  }
  const std::size_t n = states.size();
  std::vector<NameSet> obs;
  for (const auto& s : states) obs.push_back(naive_barbs(s));
  std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rel[i][j] = obs[i] == obs[j];
  auto matched = [&](std::size_t a, std::size_t b) {
    for (auto a2 : succ[a]) {
      bool ok = std::any_of(succ[b].begin(), succ[b].end(), [&](std::size_t b2) { return rel[a2][b2]; });
      if (!ok) return false;
    }
    return true;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rel[i][j] && (!matched(i, j) || !matched(j, i))) {
          rel[i][j] = 0;
          changed = true;
        }
  }
  return rel[sp][sq];
}

Process random_term(std::mt19937_64& rng, const std::vector<Name>& names, int size, int max_arity) {
  auto pick = [&](const std::vector<Name>& from) {
    return from[std::uniform_int_distribution<std::size_t>(0, from.size() - 1)(rng)];
  };
  auto arity = [&] { return std::uniform_int_distribution<int>(0, max_arity)(rng); };
  if (size <= 1) {
    if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) return Process::stop();
    std::vector<Name> args;
    for (int i = arity(); i > 0; --i) args.push_back(pick(names));
    return Process::output(pick(names), args);
  }
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0: {
      std::vector<Name> params;
      std::vector<Name> pool = names;
      std::shuffle(pool.begin(), pool.end(), rng);
      for (int i = std::min<int>(arity(), static_cast<int>(pool.size())); i > 0; --i)
        params.push_back(pool[static_cast<std::size_t>(i - 1)]);
      return Process::input(pick(names), params, random_term(rng, names, size - 1));
    }
    case 1:
      return Process::restrict(pick(names), random_term(rng, names, size - 1));
    default: {
      const int left = std::uniform_int_distribution<int>(1, std::max(1, size - 2))(rng);
      return Process::par(random_term(rng, names, left, max_arity),
                          random_term(rng, names, std::max(1, size - 1 - left), max_arity));
    }
  }
}

Diagram shuffle_nodes(const Diagram& d, std::mt19937_64& rng) {
  const int n = static_cast<int>(d.nodes().size());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Node> moved(static_cast<std::size_t>(n));
  auto map = [&](Endpoint e) {
    if (e.node != kBoundary) e.node = perm[static_cast<std::size_t>(e.node)];
    return e;
  };
  for (int v = 0; v < n; ++v) {
    Node copy = d.node(v);
    if (copy.parent != kBoundary) copy.parent = perm[static_cast<std::size_t>(copy.parent)];
    for (auto& e : copy.inputs) e = map(e);
    moved[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = std::move(copy);
  }
  Diagram out(d.domain(), d.codomain());
  for (auto& node : moved) out.add_node(std::move(node));
  for (std::size_t j = 0; j < d.outputs().size(); ++j) out.set_output(j, map(d.outputs()[j]));
  return out;
}

}  // namespace pitwo::testing
