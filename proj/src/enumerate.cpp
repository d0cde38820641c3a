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

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "pitwo/congruence.hpp"
#include "pitwo/harness.hpp"

namespace pitwo {

CorpusSpec desk_spec() { return {}; }

CorpusSpec small_spec() {
  CorpusSpec s;
  s.max_prefixes = 2;
  s.max_parallel_width = 2;
  return s;
}

std::vector<Name> alphabet(int size) {
  std::vector<Name> out;
  for (int i = 0; i < size; ++i) {
    std::string id(1, static_cast<char>('a' + i % 26));
    if (i >= 26) id += std::to_string(i / 26);
    out.emplace_back(id);
  }
  return out;
}

namespace {

using Scope = std::vector<Name>;

Scope extend(Scope scope, const std::vector<Name>& more) {
  for (const auto& n : more)
    if (std::find(scope.begin(), scope.end(), n) == scope.end()) scope.push_back(n);
  return scope;
}

// All tuples over `pool` of length `n` (with repetition).
void tuples(const Scope& pool, std::size_t n, std::vector<Name>& cur,
            std::vector<std::vector<Name>>& out) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  for (const auto& x : pool) {
    cur.push_back(x);
    tuples(pool, n, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<Name>> tuples(const Scope& pool, std::size_t n) {
  std::vector<std::vector<Name>> out;
  std::vector<Name> cur;
  tuples(pool, n, cur, out);
  return out;
}

std::vector<std::vector<Name>> distinct_tuples(const Scope& pool, std::size_t n) {
  auto all = tuples(pool, n);
  std::erase_if(all, [](std::vector<Name> t) {
    std::sort(t.begin(), t.end());
    return std::adjacent_find(t.begin(), t.end()) != t.end();
  });
  return all;
}

Name fresh_binder(char tag, int depth, int index) {
  return Name(std::string(1, tag) + std::to_string(depth) + "_" + std::to_string(index));
}

std::vector<Name> fresh_binders(char tag, int depth, int count) {
  std::vector<Name> out;
  for (int i = 0; i < count; ++i) out.push_back(fresh_binder(tag, depth, i));
  return out;
}

// Terms as (new binders) over a multiset of guarded threads.
class TermGenerator {
 public:
  explicit TermGenerator(const CorpusSpec& spec) : spec_(spec) {}

  struct Item {
    Process p;
    int prefixes;
    int news;
  };

  std::vector<Item> terms(int pb, int nb, const Scope& scope, int depth) const {
    std::vector<Item> out;
    const int max_j = spec_.allow_new ? nb : 0;
    for (int j = 0; j <= max_j; ++j) {
      auto binders = fresh_binders('v', depth, j);
      auto threads = this->threads(pb, nb - j, extend(scope, binders), depth);
      std::vector<std::size_t> pick;
      auto choose = [&](auto&& self, std::size_t from, int pused, int nused) -> void {
        std::vector<Process> parts;
        for (auto i : pick) parts.push_back(threads[i].p);
        Process body = Process::par_all(parts);
        for (auto it = binders.rbegin(); it != binders.rend(); ++it)
          body = Process::restrict(*it, body);
        out.push_back({body, pused, nused + j});
        if (static_cast<int>(pick.size()) == spec_.max_parallel_width) return;
        for (std::size_t i = from; i < threads.size(); ++i) {
          const auto& t = threads[i];
          if (pused + t.prefixes > pb) break;
          if (nused + t.news > nb - j) continue;
          pick.push_back(i);
          self(self, i, pused + t.prefixes, nused + t.news);
          pick.pop_back();
        }
      };
      choose(choose, 0, 0, 0);
    }
    return out;
  }

  std::vector<Item> threads(int pb, int nb, const Scope& scope, int depth) const {
    std::vector<Item> out;
    if (pb <= 0) return out;
    for (int a = 0; a <= spec_.max_arity; ++a)
      for (const auto& s : scope)
        for (const auto& args : tuples(scope, static_cast<std::size_t>(a)))
          out.push_back({Process::output(s, args), 1, 0});
    for (int a = 0; a <= spec_.max_arity; ++a) {
      auto params = fresh_binders('y', depth, a);
      auto bodies = distinct(terms(pb - 1, nb, extend(scope, params), depth + 1));
      for (const auto& s : scope)
        for (const auto& b : bodies)
          out.push_back({Process::input(s, params, b.p), b.prefixes + 1, b.news});
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const Item& x, const Item& y) { return x.prefixes < y.prefixes; });
    return out;
  }

  // One item per congruence class, keeping the cheapest budget usage.
  static std::vector<Item> distinct(const std::vector<Item>& items) {
    std::map<std::string, std::size_t> seen;
    std::vector<Item> out;
    for (const auto& it : items) {
      auto [pos, fresh] = seen.emplace(canonical_form(it.p).key, out.size());
      if (fresh) {
        out.push_back(it);
      } else {
        Item& kept = out[pos->second];
        kept.prefixes = std::min(kept.prefixes, it.prefixes);
        kept.news = std::min(kept.news, it.news);
      }
    }
    return out;
  }

 private:
  CorpusSpec spec_;
};

enum class Binders { kFresh, kFromNames, kBoth };

class RawGenerator {
 public:
  RawGenerator(std::vector<Name> names, int max_arity, bool allow_new, Binders mode)
      : names_(std::move(names)), max_arity_(max_arity), allow_new_(allow_new), mode_(mode) {}

  std::vector<Process> terms(std::size_t size, const Scope& scope, int depth) const {
    std::vector<Process> out;
    if (size == 0) return out;
    if (size == 1) {
      out.push_back(Process::stop());
      for (int a = 0; a <= max_arity_; ++a)
        for (const auto& s : scope)
          for (const auto& args : tuples(scope, static_cast<std::size_t>(a)))
            out.push_back(Process::output(s, args));
      return out;
    }
    for (int a = 0; a <= max_arity_; ++a) {
      for (const auto& params : binders(depth, a)) {
        auto bodies = terms(size - 1, extend(scope, params), depth + 1);
        for (const auto& s : scope)
          for (const auto& b : bodies) out.push_back(Process::input(s, params, b));
      }
    }
    if (allow_new_) {
      for (const auto& bs : binders(depth, 1))
        for (const auto& b : terms(size - 1, extend(scope, bs), depth + 1))
          out.push_back(Process::restrict(bs[0], b));
    }
    for (std::size_t l = 1; l + 2 <= size; ++l) {
      auto left = terms(l, scope, depth);
      auto right = terms(size - 1 - l, scope, depth);
      for (const auto& x : left)
        for (const auto& y : right) out.push_back(Process::par(x, y));
    }
    return out;
  }

  std::vector<Context> contexts(std::size_t budget, const Scope& scope, int depth) const {
    std::vector<Context> out;
    if (budget == 0) return out;
    out.emplace_back();
    if (budget == 1) return out;
    for (int a = 0; a <= max_arity_; ++a)
      for (const auto& params : binders(depth, a))
        for (const auto& inner : contexts(budget - 1, extend(scope, params), depth + 1))
          for (const auto& s : scope) out.push_back(inner.under_input(s, params));
    if (allow_new_)
      for (const auto& bs : binders(depth, 1))
        for (const auto& inner : contexts(budget - 1, extend(scope, bs), depth + 1))
          out.push_back(inner.under_new(bs[0]));
    for (std::size_t rs = 1; rs + 2 <= budget; ++rs) {
      auto sides = terms(rs, scope, depth);
      for (const auto& inner : contexts(budget - 1 - rs, scope, depth))
        for (const auto& r : sides) {
          out.push_back(inner.par_left(r));
          out.push_back(inner.par_right(r));
        }
    }
    return out;
  }

  std::vector<std::vector<Name>> binders(int depth, int arity) const {
    switch (mode_) {
      case Binders::kFresh:
        return {fresh_binders('y', depth, arity)};
      case Binders::kFromNames:
        return distinct_tuples(names_, static_cast<std::size_t>(arity));
      case Binders::kBoth:
        break;
    }
    return distinct_tuples(extend(names_, fresh_binders('y', depth, arity)),
                           static_cast<std::size_t>(arity));
  }

 private:
  std::vector<Name> names_;
  int max_arity_;
  bool allow_new_;
  Binders mode_;
};

}  // namespace

std::vector<Process> enumerate_terms(const CorpusSpec& spec) {
  TermGenerator gen(spec);
  auto items = gen.terms(spec.max_prefixes, spec.max_news,
                         alphabet(spec.name_alphabet_size), 0);
  std::map<std::pair<std::size_t, std::string>, Process> classes;
  for (const auto& it : items) {
    auto c = canonical_form(it.p);
    classes.emplace(std::make_pair(c.term.size(), c.key), c.term);
  }
  std::vector<Process> out;
  out.reserve(classes.size());
  for (auto& [key, p] : classes) out.push_back(p);
  return out;
}

std::vector<Process> enumerate_raw(std::size_t size, const std::vector<Name>& names,
                                   int max_arity, bool allow_new, bool binders_from_names) {
  RawGenerator gen(names, max_arity, allow_new,
                   binders_from_names ? Binders::kFromNames : Binders::kFresh);
  return gen.terms(size, names, 0);
}

std::vector<Context> enumerate_contexts(const CorpusSpec& spec, std::size_t max_size) {
  auto names = alphabet(spec.name_alphabet_size);
  RawGenerator gen(names, spec.max_arity, spec.allow_new, Binders::kBoth);
  return gen.contexts(max_size, names, 0);
}

}  // namespace pitwo
