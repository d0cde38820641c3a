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

#include "pitwo/congruence.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>

namespace pitwo {
namespace {

// Process with every name resolved: binders get unique ids >= 0, free names
// get ids -1, -2, ... following the sorted free-name list.
struct RTerm {
  Tag tag = Tag::kStop;
  int subject = 0;
  std::vector<int> names;  // output arguments or input parameters
  int binder = -1;
  std::unique_ptr<RTerm> first;
  std::unique_ptr<RTerm> second;
};

class Resolver {
 public:
  explicit Resolver(const NameSet& fn) : free_(fn.begin(), fn.end()) {}

  std::unique_ptr<RTerm> run(const Process& p) {
    auto t = std::make_unique<RTerm>();
    t->tag = p.tag();
    switch (p.tag()) {
      case Tag::kStop:
        break;
      case Tag::kOutput:
        t->subject = lookup(p.as_output().subject);
        for (const auto& a : p.as_output().args) t->names.push_back(lookup(a));
        break;
      case Tag::kInput: {
        const auto& in = p.as_input();
        t->subject = lookup(in.subject);
        for (const auto& y : in.params) {
          t->names.push_back(next_);
          env_.emplace_back(y, next_++);
        }
        t->first = run(in.body);
        env_.resize(env_.size() - in.params.size());
        break;
      }
      case Tag::kNew:
        t->binder = next_;
        env_.emplace_back(p.as_new().binder, next_++);
        t->first = run(p.as_new().body);
        env_.pop_back();
        break;
      case Tag::kPar:
        t->first = run(p.as_par().left);
        t->second = run(p.as_par().right);
        break;
    }
    return t;
  }

  const std::vector<Name>& free_table() const { return free_; }

 private:
  int lookup(const Name& n) const {
    for (auto it = env_.rbegin(); it != env_.rend(); ++it) {
      if (it->first == n) return it->second;
    }
    auto pos = std::lower_bound(free_.begin(), free_.end(), n);
    return -1 - static_cast<int>(pos - free_.begin());
  }

  std::vector<Name> free_;
  std::vector<std::pair<Name, int>> env_;
  int next_ = 0;
};

void occurrences(const RTerm* t, std::set<int>& out) {
  switch (t->tag) {
    case Tag::kStop:
      return;
    case Tag::kOutput:
      out.insert(t->subject);
      out.insert(t->names.begin(), t->names.end());
      return;
    case Tag::kInput:
      out.insert(t->subject);
      occurrences(t->first.get(), out);
      return;
    case Tag::kNew:
      occurrences(t->first.get(), out);
      return;
    case Tag::kPar:
      occurrences(t->first.get(), out);
      occurrences(t->second.get(), out);
      return;
  }
}

void flatten(const RTerm* t, std::vector<int>& binders, std::vector<const RTerm*>& comps) {
  switch (t->tag) {
    case Tag::kStop:
      return;
    case Tag::kNew:
      binders.push_back(t->binder);
      flatten(t->first.get(), binders, comps);
      return;
    case Tag::kPar:
      flatten(t->first.get(), binders, comps);
      flatten(t->second.get(), binders, comps);
      return;
    default:
      comps.push_back(t);
      return;
  }
}

struct CScope;

struct CComp {
  const RTerm* term = nullptr;
  std::string key;
  std::shared_ptr<CScope> body;  // inputs only
};

struct CScope {
  std::vector<int> binders;
  std::vector<CComp> comps;
  std::string key;
};

// Stack entry. Binders whose relative order is still undecided are rendered
// by a placeholder mark instead of a de Bruijn index.
struct Entry {
  int id;
  char mark;
};

class Canonicalizer {
 public:
  Canonicalizer(const std::vector<Name>& free_table, bool gc_vacuous)
      : free_(free_table), gc_(gc_vacuous) {}

  CScope scope(const RTerm* t) {
    std::vector<int> binders;
    std::vector<const RTerm*> comps;
    flatten(t, binders, comps);

    std::vector<std::set<int>> occ(comps.size());
    std::set<int> used;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      occurrences(comps[i], occ[i]);
      used.insert(occ[i].begin(), occ[i].end());
    }
    std::vector<int> live;
    for (int b : binders) {
      if (used.count(b)) live.push_back(b);
    }
    if (live.empty() && !binders.empty() && !gc_) live.push_back(binders.front());

    if (live.size() <= 1) return evaluate(live, comps);

    // Group binders by an order-independent signature; only orders that
    // respect the sorted signatures are searched.
    std::vector<std::pair<std::string, int>> sig;
    for (int b : live) {
      for (int c : live) env_.push_back({c, c == b ? 'y' : 'x'});
      std::vector<std::string> keys;
      for (std::size_t i = 0; i < comps.size(); ++i) {
        if (occ[i].count(b)) keys.push_back(component(comps[i]).key);
      }
      env_.resize(env_.size() - live.size());
      std::sort(keys.begin(), keys.end());
      std::string s;
      for (const auto& k : keys) s += k + ';';
      sig.emplace_back(std::move(s), b);
    }
    std::stable_sort(sig.begin(), sig.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<std::pair<std::size_t, std::size_t>> groups;
    for (std::size_t i = 0; i < sig.size();) {
      std::size_t j = i;
      while (j < sig.size() && sig[j].first == sig[i].first) ++j;
      groups.emplace_back(i, j);
      i = j;
    }
    std::vector<int> order;
    for (const auto& s : sig) order.push_back(s.second);
    for (auto [lo, hi] : groups) std::sort(order.begin() + lo, order.begin() + hi);

    CScope best;
    bool have = false;
    for (;;) {
      CScope candidate = evaluate(order, comps);
      if (!have || candidate.key < best.key) {
        best = std::move(candidate);
        have = true;
      }
      // Odometer over the per-group permutations.
      std::size_t g = 0;
      for (; g < groups.size(); ++g) {
        auto [lo, hi] = groups[g];
        if (std::next_permutation(order.begin() + lo, order.begin() + hi)) break;
      }
      if (g == groups.size()) break;
    }
    return best;
  }

 private:
  CScope evaluate(const std::vector<int>& order, const std::vector<const RTerm*>& comps) {
    CScope out;
    out.binders = order;
    for (int b : order) env_.push_back({b, 0});
    out.comps.reserve(comps.size());
    for (const RTerm* c : comps) out.comps.push_back(component(c));
    env_.resize(env_.size() - order.size());
    std::sort(out.comps.begin(), out.comps.end(),
              [](const CComp& a, const CComp& b) { return a.key < b.key; });
    out.key = "S" + std::to_string(order.size()) + "[";
    for (std::size_t i = 0; i < out.comps.size(); ++i) {
      if (i) out.key += ';';
      out.key += out.comps[i].key;
    }
    out.key += ']';
    return out;
  }

  CComp component(const RTerm* t) {
    CComp c;
    c.term = t;
    if (t->tag == Tag::kOutput) {
      c.key = "O" + ref(t->subject) + "(";
      for (std::size_t i = 0; i < t->names.size(); ++i) {
        if (i) c.key += ',';
        c.key += ref(t->names[i]);
      }
      c.key += ')';
      return c;
    }
    c.key = "I" + ref(t->subject) + "/" + std::to_string(t->names.size()) + "{";
    for (int y : t->names) env_.push_back({y, 0});
    c.body = std::make_shared<CScope>(scope(t->first.get()));
    env_.resize(env_.size() - t->names.size());
    c.key += c.body->key + "}";
    return c;
  }

  std::string ref(int id) const {
    if (id < 0) return "f" + free_[static_cast<std::size_t>(-1 - id)].str();
    for (std::size_t i = env_.size(); i-- > 0;) {
      if (env_[i].id == id) {
        if (env_[i].mark) return std::string(1, env_[i].mark);
        return "b" + std::to_string(env_.size() - 1 - i);
      }
    }
    return "?";
  }

  const std::vector<Name>& free_;
  bool gc_;
  std::vector<Entry> env_;
};

Process par_left(const std::vector<Process>& parts) {
  if (parts.empty()) return Process::stop();
  Process acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = Process::par(acc, parts[i]);
  return acc;
}

class Rebuilder {
 public:
  Rebuilder(const std::vector<Name>& free_table, NameSet avoid)
      : free_(free_table), avoid_(std::move(avoid)) {}

  Process scope(const CScope& s, std::vector<Name>* binders_out = nullptr,
                std::vector<Process>* comps_out = nullptr) {
    std::vector<Name> binders;
    for (int b : s.binders) binders.push_back(assign(b));
    std::vector<Process> comps;
    for (const auto& c : s.comps) comps.push_back(component(c));
    Process body = par_left(comps);
    for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
      body = Process::restrict(*it, body);
    }
    if (binders_out) *binders_out = std::move(binders);
    if (comps_out) *comps_out = std::move(comps);
    return body;
  }

 private:
  Name assign(int id) {
    Name n = fresh_name(avoid_);
    avoid_.insert(n);
    bound_.emplace(id, n);
    return n;
  }

  const Name& name_of(int id) const {
    if (id < 0) return free_[static_cast<std::size_t>(-1 - id)];
    return bound_.at(id);
  }

  Process component(const CComp& c) {
    const RTerm* t = c.term;
    if (t->tag == Tag::kOutput) {
      std::vector<Name> args;
      for (int a : t->names) args.push_back(name_of(a));
      return Process::output(name_of(t->subject), std::move(args));
    }
    std::vector<Name> params;
    for (int y : t->names) params.push_back(assign(y));
    Process body = scope(*c.body);
    return Process::input(name_of(t->subject), std::move(params), std::move(body));
  }

  const std::vector<Name>& free_;
  NameSet avoid_;
  std::map<int, Name> bound_;
};

}  // namespace

CanonicalProcess canonical_form(const Process& p, const CongruenceOptions& options) {
  NameSet fn = free_names(p);
  Resolver resolver(fn);
  auto resolved = resolver.run(p);
  Canonicalizer canon(resolver.free_table(), options.gc_vacuous);
  CScope top = canon.scope(resolved.get());

  CanonicalProcess out;
  out.key = top.key;
  Rebuilder rebuild(resolver.free_table(), fn);
  out.term = rebuild.scope(top, &out.binders, &out.components);
  return out;
}

bool congruent(const Process& p, const Process& q, const CongruenceOptions& options) {
  return canonical_form(p, options).key == canonical_form(q, options).key;
}

}  // namespace pitwo
