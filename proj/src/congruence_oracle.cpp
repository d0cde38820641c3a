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

#include <deque>
#include <unordered_set>

#include "pitwo/congruence.hpp"

// Direct search over the structural axioms, independent of the normal-form
// machinery in congruence.cpp. States are compared up to alpha_key.

namespace pitwo {
namespace {

void root_steps(const Process& t, std::vector<Process>& out) {
  if (t.tag() == Tag::kPar) {
    const auto& [l, r] = t.as_par();
    // P | 0 -> P,  0 | P -> P
    if (r.is_stop()) out.push_back(l);
    if (l.is_stop()) out.push_back(r);
    // P | Q -> Q | P
    out.push_back(Process::par(r, l));
    // (P | Q) | R <-> P | (Q | R)
    if (l.tag() == Tag::kPar) {
      out.push_back(Process::par(l.as_par().left, Process::par(l.as_par().right, r)));
    }
    if (r.tag() == Tag::kPar) {
      out.push_back(Process::par(Process::par(l, r.as_par().left), r.as_par().right));
    }
    // ((new x)P) | Q -> (new x)(P | Q), renaming x away from fn(Q)
    if (l.tag() == Tag::kNew) {
      const auto& nw = l.as_new();
      NameSet fq = free_names(r);
      if (!fq.count(nw.binder)) {
        out.push_back(Process::restrict(nw.binder, Process::par(nw.body, r)));
      } else {
        NameSet avoid = all_names(nw.body);
        avoid.insert(fq.begin(), fq.end());
        avoid.insert(nw.binder);
        Name fresh = fresh_name(avoid);
        Process moved = substitute(nw.body, {{nw.binder, fresh}});
        out.push_back(Process::restrict(fresh, Process::par(moved, r)));
      }
    }
  }
  if (t.tag() == Tag::kNew) {
    const auto& [x, body] = t.as_new();
    if (body.tag() == Tag::kNew) {
      const auto& [y, inner] = body.as_new();
      // (new x)(new y)P -> (new y)(new x)P
      if (x != y) out.push_back(Process::restrict(y, Process::restrict(x, inner)));
      // (new x)(new x)P -> (new x)P, seen through alpha: the outer binder is
      // vacuous and sits directly on another restriction.
      if (!free_names(body).count(x)) out.push_back(body);
    }
    // (new x)(P | Q) -> ((new x)P) | Q  when x is not free in Q
    if (body.tag() == Tag::kPar && !free_names(body.as_par().right).count(x)) {
      out.push_back(Process::par(Process::restrict(x, body.as_par().left), body.as_par().right));
    }
  }
}

void all_steps(const Process& t, std::vector<Process>& out) {
  root_steps(t, out);
  std::vector<Process> inner;
  switch (t.tag()) {
    case Tag::kStop:
    case Tag::kOutput:
      return;
    case Tag::kInput: {
      const auto& in = t.as_input();
      all_steps(in.body, inner);
      for (auto& b : inner) out.push_back(Process::input(in.subject, in.params, std::move(b)));
      return;
    }
    case Tag::kNew: {
      const auto& nw = t.as_new();
      all_steps(nw.body, inner);
      for (auto& b : inner) out.push_back(Process::restrict(nw.binder, std::move(b)));
      return;
    }
    case Tag::kPar: {
      const auto& [l, r] = t.as_par();
      all_steps(l, inner);
      for (auto& x : inner) out.push_back(Process::par(std::move(x), r));
      inner.clear();
      all_steps(r, inner);
      for (auto& x : inner) out.push_back(Process::par(l, std::move(x)));
      return;
    }
  }
}

std::unordered_set<std::string> bounded_closure(const Process& p, int depth) {
  std::unordered_set<std::string> seen{alpha_key(p)};
  std::vector<Process> frontier{p};
  for (int d = 0; d < depth && !frontier.empty(); ++d) {
    std::vector<Process> next;
    for (const auto& s : frontier) {
      for (auto& n : axiom_steps(s)) {
        if (seen.insert(alpha_key(n)).second) next.push_back(std::move(n));
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

std::vector<Process> axiom_steps(const Process& p) {
  std::vector<Process> out;
  all_steps(p, out);
  return out;
}

bool oracle_congruent(const Process& p, const Process& q, int depth) {
  auto a = bounded_closure(p, depth);
  auto b = bounded_closure(q, depth);
  if (a.size() > b.size()) std::swap(a, b);
  for (const auto& k : a) {
    if (b.count(k)) return true;
  }
  return false;
}

std::size_t CongruenceClosure::intern(const std::string& key, bool& fresh) {
  auto [it, inserted] = index_.emplace(key, parent_.size());
  fresh = inserted;
  if (inserted) parent_.push_back(it->second);
  return it->second;
}

std::size_t CongruenceClosure::class_of(std::size_t state) {
  while (parent_[state] != state) {
    parent_[state] = parent_[parent_[state]];
    state = parent_[state];
  }
  return state;
}

void CongruenceClosure::unite(std::size_t a, std::size_t b) {
  a = class_of(a);
  b = class_of(b);
  if (a != b) parent_[std::max(a, b)] = std::min(a, b);
}

std::size_t CongruenceClosure::add(const Process& p) {
  bool fresh = false;
  std::size_t root = intern(alpha_key(p), fresh);
  if (!fresh) return root;
  std::deque<std::pair<Process, std::size_t>> queue{{p, root}};
  while (!queue.empty()) {
    auto [s, id] = std::move(queue.front());
    queue.pop_front();
    for (auto& n : axiom_steps(s)) {
      std::size_t nid = intern(alpha_key(n), fresh);
      unite(id, nid);
      if (fresh) queue.emplace_back(std::move(n), nid);
    }
  }
  return root;
}

}  // namespace pitwo
