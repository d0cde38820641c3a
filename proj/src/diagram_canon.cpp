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
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "pitwo/diagram.hpp"

namespace pitwo {

namespace {

// Vertices: nodes, then domain ports, then codomain ports. An edge label
// packs the two port indices it joins; port order that carries no meaning
// is written as a wildcard, and box membership has its own label.
constexpr int kWildcard = -1;
constexpr int kPortBase = 4096;
constexpr int kMemberLabel = 0;

int edge_label(int source_port, int sink_port) {
  return (source_port + 2) * kPortBase + (sink_port + 2);
}

struct LabeledGraph {
  std::vector<std::string> labels;
  struct Arc {
    int to;
    int label;
  };
  std::vector<std::vector<Arc>> out, in;
  std::vector<std::tuple<int, int, int>> edges;  // from, label, to

  int vertex_count() const { return static_cast<int>(labels.size()); }
};

LabeledGraph build(const Diagram& d) {
  LabeledGraph g;
  const int n = static_cast<int>(d.nodes().size());
  const int dom = static_cast<int>(d.domain().size());
  g.labels.reserve(static_cast<std::size_t>(n + dom) + d.codomain().size());
  for (const Node& node : d.nodes()) {
    std::string l = gen_name(node.kind);
    l += '/';
    l += std::to_string(node.arity);
    if (!node.label.empty()) {
      l += ':';
      l += node.label;
    }
    g.labels.push_back(std::move(l));
  }
  for (std::size_t j = 0; j < d.domain().size(); ++j)
    g.labels.push_back("dom" + std::to_string(j) + ":" + d.domain()[j].to_string());
  for (std::size_t j = 0; j < d.codomain().size(); ++j)
    g.labels.push_back("cod" + std::to_string(j) + ":" + d.codomain()[j].to_string());
  const auto total = g.labels.size();
  g.out.resize(total);
  g.in.resize(total);

  auto add = [&](int from, int label, int to) {
    g.edges.emplace_back(from, label, to);
    g.out[static_cast<std::size_t>(from)].push_back({to, label});
    g.in[static_cast<std::size_t>(to)].push_back({from, label});
  };
  auto source = [&](Endpoint e, int& port) {
    if (e.node == kBoundary) {
      port = 0;
      return n + e.port;
    }
    port = symmetric_outputs(d.node(e.node).kind) ? kWildcard : e.port;
    return e.node;
  };
  for (int v = 0; v < n; ++v) {
    const Node& node = d.node(v);
    const bool sym = symmetric_inputs(node.kind);
    for (std::size_t i = 0; i < node.inputs.size(); ++i) {
      int sp = 0;
      const int from = source(node.inputs[i], sp);
      add(from, edge_label(sp, sym ? kWildcard : static_cast<int>(i)), v);
    }
    if (node.parent != kBoundary) add(v, kMemberLabel, node.parent);
  }
  for (std::size_t j = 0; j < d.outputs().size(); ++j) {
    int sp = 0;
    const int from = source(d.outputs()[j], sp);
    add(from, edge_label(sp, 0), n + dom + static_cast<int>(j));
  }
  return g;
}

using Coloring = std::vector<int>;

int color_count(const Coloring& c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

// Dense ranks of arbitrary comparable keys.
template <typename Key>
Coloring rank_keys(const std::vector<Key>& keys) {
  std::vector<Key> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Coloring c(keys.size());
  for (std::size_t v = 0; v < keys.size(); ++v)
    c[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) -
                            sorted.begin());
  return c;
}

Coloring refine(const LabeledGraph& g, Coloring c) {
  const std::size_t n = c.size();
  int count = color_count(c);
  thread_local std::vector<std::vector<long long>> sigs;
  thread_local std::vector<int> order;
  thread_local std::vector<long long> scratch;
  if (sigs.size() < n) sigs.resize(n);
  order.resize(n);
  for (;;) {
    const long long stride = count + 1;
    for (std::size_t v = 0; v < n; ++v) {
      auto& s = sigs[v];
      s.clear();
      s.push_back(c[v]);
      for (const auto* arcs : {&g.out[v], &g.in[v]}) {
        scratch.clear();
        for (const auto& a : *arcs)
          scratch.push_back(a.label * stride + c[static_cast<std::size_t>(a.to)]);
        std::sort(scratch.begin(), scratch.end());
        s.insert(s.end(), scratch.begin(), scratch.end());
        s.push_back(-1);
      }
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return sigs[static_cast<std::size_t>(a)] < sigs[static_cast<std::size_t>(b)];
    });
    Coloring next(n);
    int rank = -1;
    for (std::size_t i = 0; i < n; ++i) {
      const auto v = static_cast<std::size_t>(order[i]);
      if (i == 0 || sigs[v] != sigs[static_cast<std::size_t>(order[i - 1])]) ++rank;
      next[v] = rank;
    }
    c = std::move(next);
    if (rank + 1 == count) return c;
    count = rank + 1;
  }
}

std::string encode(const LabeledGraph& g, const Coloring& rank) {
  const int n = g.vertex_count();
  std::vector<int> by_rank(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) by_rank[static_cast<std::size_t>(rank[static_cast<std::size_t>(v)])] = v;
  std::string out;
  for (int r = 0; r < n; ++r) {
    out += g.labels[static_cast<std::size_t>(by_rank[static_cast<std::size_t>(r)])];
    out += ';';
  }
  std::vector<std::tuple<int, int, int>> es;
  for (const auto& [from, label, to] : g.edges)
    es.emplace_back(rank[static_cast<std::size_t>(from)], label,
                    rank[static_cast<std::size_t>(to)]);
  std::sort(es.begin(), es.end());
  out += '#';
  for (const auto& [f, l, t] : es) {
    out += std::to_string(f);
    out += '-';
    out += std::to_string(l);
    out += '-';
    out += std::to_string(t);
    out += ';';
  }
  return out;
}

// Swapping u and v is an automorphism when their neighbourhoods coincide.
bool twins(const LabeledGraph& g, int u, int v) {
  auto norm = [&](const std::vector<LabeledGraph::Arc>& arcs, bool& touches) {
    std::vector<std::pair<int, int>> out;
    for (const auto& a : arcs) {
      if (a.to == u || a.to == v) touches = true;
      out.emplace_back(a.to, a.label);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  bool touches = false;
  auto uo = norm(g.out[static_cast<std::size_t>(u)], touches);
  auto vo = norm(g.out[static_cast<std::size_t>(v)], touches);
  auto ui = norm(g.in[static_cast<std::size_t>(u)], touches);
  auto vi = norm(g.in[static_cast<std::size_t>(v)], touches);
  return !touches && uo == vo && ui == vi;
}

struct Search {
  const LabeledGraph& g;
  std::optional<std::string> best;
  Coloring best_rank;

  void run(Coloring c) {
    c = refine(g, std::move(c));
    const int n = g.vertex_count();
    if (color_count(c) == n) {
      std::string enc = encode(g, c);
      if (!best || enc < *best) {
        best = std::move(enc);
        best_rank = c;
      }
      return;
    }
    // Smallest color class with more than one member.
    std::vector<int> size(static_cast<std::size_t>(color_count(c)), 0);
    for (int col : c) ++size[static_cast<std::size_t>(col)];
    int cell = -1;
    for (std::size_t k = 0; k < size.size(); ++k)
      if (size[k] > 1) {
        cell = static_cast<int>(k);
        break;
      }
    std::vector<int> tried;
    for (int v = 0; v < n; ++v) {
      if (c[static_cast<std::size_t>(v)] != cell) continue;
      bool redundant = false;
      for (int u : tried)
        if (twins(g, u, v)) {
          redundant = true;
          break;
        }
      if (redundant) continue;
      tried.push_back(v);
      std::vector<int> keys(c.size());
      for (int w = 0; w < n; ++w) {
        int col = c[static_cast<std::size_t>(w)];
        keys[static_cast<std::size_t>(w)] = 2 * col + (col == cell && w != v ? 1 : 0);
      }
      run(rank_keys(keys));
    }
  }
};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

CanonicalLabeling canonical_labeling(const Diagram& d) {
  LabeledGraph g = build(d);
  Search s{g, std::nullopt, {}};
  Coloring initial = rank_keys(g.labels);
  s.run(initial);
  CanonicalLabeling out;
  out.encoding = s.best.value_or("");
  std::vector<int> raw(s.best_rank.begin(),
                       s.best_rank.begin() + static_cast<long>(d.nodes().size()));
  out.node_rank = rank_keys(raw);
  return out;
}

std::string canonical_key(const Diagram& d, const NormalizeOptions& options) {
  return canonical_labeling(normalize(d, options)).encoding;
}

std::uint64_t canonical_hash(const Diagram& d) { return fnv1a(canonical_key(d)); }

bool equal(const Diagram& a, const Diagram& b, const NormalizeOptions& options) {
  if (a.domain() != b.domain() || a.codomain() != b.codomain()) return false;
  return canonical_key(a, options) == canonical_key(b, options);
}

}  // namespace pitwo
