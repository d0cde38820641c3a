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

#include "pitwo/rewrite.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "pitwo/error.hpp"

namespace pitwo {

namespace {

bool top_node(const Diagram& d, Endpoint e, Gen kind) {
  return e.node != kBoundary && d.node(e.node).parent == kBoundary &&
         d.node(e.node).kind == kind;
}

struct Pair {
  int output_node;
  int input_node;
};

// Replaces each (output, input) pair on the spine by an Ev of the input's
// closure on the output's message; subjects are discarded.
Diagram fire_pairs(const Diagram& d, const std::vector<Pair>& pairs) {
  Diagram out = d;
  const Endpoint head = out.outputs()[0];
  std::vector<Endpoint> components = spine(out);
  std::vector<bool> dead(out.nodes().size(), false);
  for (const auto& [o, i] : pairs) {
    const Node sender = out.node(o);
    const Node receiver = out.node(i);
    Node ev;
    ev.kind = Gen::kEv;
    ev.arity = sender.arity;
    ev.inputs.push_back(receiver.inputs[1]);
    ev.inputs.insert(ev.inputs.end(), sender.inputs.begin() + 1, sender.inputs.end());
    const int e = out.add_node(std::move(ev));
    for (const Endpoint subject : {sender.inputs[0], receiver.inputs[0]}) {
      Node drop;
      drop.kind = Gen::kDrop;
      drop.inputs = {subject};
      out.add_node(std::move(drop));
    }
    for (auto& c : components) {
      if (c == Endpoint{o, 0}) c = {e, 0};
    }
    components.erase(std::remove(components.begin(), components.end(), Endpoint{i, 0}),
                     components.end());
    dead.resize(out.nodes().size(), false);
    dead[static_cast<std::size_t>(o)] = true;
    dead[static_cast<std::size_t>(i)] = true;
  }
  // A spine with a redex always has a Par at its head.
  Node& par = out.node(head.node);
  par.inputs = components;
  par.arity = static_cast<int>(components.size());
  dead.resize(out.nodes().size(), false);
  out.erase_nodes(dead);
  return normalize(out);
}

std::vector<Diagram> dedupe(std::vector<Diagram> ds) {
  std::map<std::string, Diagram> by_key;
  for (auto& d : ds) by_key.emplace(canonical_labeling(d).encoding, std::move(d));
  std::vector<Diagram> out;
  for (auto& [key, d] : by_key) out.push_back(std::move(d));
  return out;
}

}  // namespace

std::vector<Endpoint> spine(const Diagram& d) {
  if (d.codomain() != std::vector<PortType>{PortType::proc()}) return {};
  const Endpoint head = d.outputs()[0];
  if (top_node(d, head, Gen::kPar)) return d.node(head.node).inputs;
  return {head};
}

Endpoint name_root(const Diagram& d, Endpoint e) {
  while (e.node != kBoundary && d.node(e.node).kind == Gen::kDup) e = d.node(e.node).inputs[0];
  return e;
}

std::vector<DiagramRedex> find_diagram_redexes(const Diagram& d) {
  std::vector<int> outs, ins, comms;
  for (const auto& c : spine(d)) {
    if (top_node(d, c, Gen::kOutput)) outs.push_back(c.node);
    if (top_node(d, c, Gen::kInput)) ins.push_back(c.node);
    if (top_node(d, c, Gen::kComm)) comms.push_back(c.node);
  }
  std::sort(outs.begin(), outs.end());
  std::sort(ins.begin(), ins.end());
  std::sort(comms.begin(), comms.end());
  std::vector<DiagramRedex> found;
  for (int o : outs) {
    const Endpoint root = name_root(d, d.node(o).inputs[0]);
    for (int i : ins) {
      if (d.node(o).arity != d.node(i).arity) continue;
      if (name_root(d, d.node(i).inputs[0]) != root) continue;
      for (int c : comms) found.push_back({o, i, c, d.node(o).arity, root});
    }
  }
  return found;
}

std::vector<DiagramRedex> find_diagram_redexes(const TopDiagram& d) {
  return find_diagram_redexes(d.diagram);
}

Diagram apply_comm(const Diagram& d, const DiagramRedex& r) {
  auto all = find_diagram_redexes(d);
  if (std::find(all.begin(), all.end(), r) == all.end())
    throw StaleRedex("no comm redex on output " + std::to_string(r.output_node) +
                     " and input " + std::to_string(r.input_node));
  return fire_pairs(d, {{r.output_node, r.input_node}});
}

TopDiagram apply_comm(const TopDiagram& d, const DiagramRedex& r) {
  TopDiagram out = d;
  out.diagram = apply_comm(d.diagram, r);
  return out;
}

std::vector<Diagram> comm_step(const Diagram& d) {
  std::vector<Diagram> results;
  for (const auto& r : find_diagram_redexes(d)) results.push_back(apply_comm(d, r));
  return dedupe(std::move(results));
}

std::vector<TopDiagram> comm_step(const TopDiagram& d) {
  std::vector<TopDiagram> out;
  for (auto& r : comm_step(d.diagram)) {
    TopDiagram t = d;
    t.diagram = std::move(r);
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<ConcurrentStep> concurrent_step(const Diagram& d, int k) {
  const auto redexes = find_diagram_redexes(d);
  std::vector<int> catalysts;
  std::vector<Pair> pairs;
  std::vector<DiagramRedex> witness;
  for (const auto& r : redexes) {
    if (std::find(catalysts.begin(), catalysts.end(), r.catalyst) == catalysts.end())
      catalysts.push_back(r.catalyst);
    bool seen = std::any_of(pairs.begin(), pairs.end(), [&](const Pair& p) {
      return p.output_node == r.output_node && p.input_node == r.input_node;
    });
    if (!seen) {
      pairs.push_back({r.output_node, r.input_node});
      witness.push_back(r);
    }
  }
  const std::size_t cap = std::min<std::size_t>(static_cast<std::size_t>(std::max(k, 0)),
                                                catalysts.size());
  auto disjoint = [&](const Pair& a, const Pair& b) {
    return a.output_node != b.output_node && a.input_node != b.input_node;
  };

  std::vector<std::vector<std::size_t>> sets;
  std::vector<std::size_t> current;
  auto grow = [&](auto&& self, std::size_t from) -> void {
    bool extended = false;
    if (current.size() < cap) {
      for (std::size_t j = 0; j < pairs.size(); ++j) {
        bool ok = std::all_of(current.begin(), current.end(),
                              [&](std::size_t c) { return c != j && disjoint(pairs[c], pairs[j]); });
        if (!ok) continue;
        extended = true;
        if (j < from) continue;  // reached in another branch
        current.push_back(j);
        self(self, j + 1);
        current.pop_back();
      }
    }
    if (!extended && !current.empty()) sets.push_back(current);
  };
  grow(grow, 0);

  std::map<std::string, ConcurrentStep> by_key;
  for (const auto& s : sets) {
    ConcurrentStep step;
    std::vector<Pair> chosen;
    for (std::size_t idx = 0; idx < s.size(); ++idx) {
      DiagramRedex r = witness[s[idx]];
      r.catalyst = catalysts[idx];
      step.redexes.push_back(r);
      chosen.push_back(pairs[s[idx]]);
    }
    step.result = fire_pairs(d, chosen);
    by_key.emplace(canonical_labeling(step.result).encoding, std::move(step));
  }
  std::vector<ConcurrentStep> out;
  for (auto& [key, step] : by_key) out.push_back(std::move(step));
  return out;
}

}  // namespace pitwo
