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
#include <sstream>

#include "pitwo/diagram.hpp"

namespace pitwo {

namespace {

nlohmann::json types_json(const std::vector<PortType>& ts) {
  auto out = nlohmann::json::array();
  for (const auto& t : ts) out.push_back(t.to_string());
  return out;
}

// Port numbers with the order of symmetric ports fixed by the labeling.
// Dup outputs follow their consumers; Par inputs follow their sources.
struct PortMaps {
  std::vector<std::vector<int>> in;
  std::vector<std::vector<int>> out;
};

PortMaps canonical_ports(const Diagram& d, const std::vector<int>& rank) {
  const std::size_t n = d.nodes().size();
  PortMaps m{std::vector<std::vector<int>>(n), std::vector<std::vector<int>>(n)};
  for (std::size_t v = 0; v < n; ++v) {
    const Node& nd = d.nodes()[v];
    m.in[v].resize(nd.inputs.size());
    for (std::size_t i = 0; i < nd.inputs.size(); ++i) m.in[v][i] = static_cast<int>(i);
    m.out[v].resize(output_types(nd).size());
    for (std::size_t i = 0; i < m.out[v].size(); ++i) m.out[v][i] = static_cast<int>(i);
  }
  auto sink_key = [&](Endpoint e) {
    return e.node == kBoundary ? std::pair<int, int>{-1, e.port}
                               : std::pair<int, int>{rank[static_cast<std::size_t>(e.node)], e.port};
  };
  std::vector<std::vector<std::pair<std::pair<int, int>, int>>> uses(n);
  for (const auto& [src, sink] : d.consumers())
    if (src.node != kBoundary && symmetric_outputs(d.node(src.node).kind))
      uses[static_cast<std::size_t>(src.node)].push_back({sink_key(sink), src.port});
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(uses[v].begin(), uses[v].end());
    for (std::size_t k = 0; k < uses[v].size(); ++k)
      m.out[v][static_cast<std::size_t>(uses[v][k].second)] = static_cast<int>(k);
  }
  for (std::size_t v = 0; v < n; ++v) {
    const Node& nd = d.nodes()[v];
    if (!symmetric_inputs(nd.kind)) continue;
    std::vector<std::pair<std::pair<int, int>, int>> srcs;
    for (std::size_t i = 0; i < nd.inputs.size(); ++i) {
      const Endpoint e = nd.inputs[i];
      const std::pair<int, int> key =
          e.node == kBoundary
              ? std::pair<int, int>{-1, e.port}
              : std::pair<int, int>{rank[static_cast<std::size_t>(e.node)],
                                    m.out[static_cast<std::size_t>(e.node)][static_cast<std::size_t>(e.port)]};
      srcs.push_back({key, static_cast<int>(i)});
    }
    std::sort(srcs.begin(), srcs.end());
    for (std::size_t k = 0; k < srcs.size(); ++k) m.in[v][static_cast<std::size_t>(srcs[k].second)] = static_cast<int>(k);
  }
  return m;
}

}  // namespace

nlohmann::json to_json(const Diagram& d) {
  const auto labeling = canonical_labeling(d);
  const auto& rank = labeling.node_rank;
  const PortMaps ports = canonical_ports(d, rank);
  auto id = [&](int v) { return rank[static_cast<std::size_t>(v)]; };
  auto endpoint = [&](Endpoint e, const char* boundary, bool source) {
    nlohmann::json j;
    if (e.node == kBoundary) {
      j["node"] = boundary;
      j["port"] = e.port;
    } else {
      const auto& map = source ? ports.out : ports.in;
      j["node"] = id(e.node);
      j["port"] = map[static_cast<std::size_t>(e.node)][static_cast<std::size_t>(e.port)];
    }
    return j;
  };

  nlohmann::json out;
  out["domain"] = types_json(d.domain());
  out["codomain"] = types_json(d.codomain());
  std::vector<nlohmann::json> nodes(d.nodes().size());
  auto wires = nlohmann::json::array();
  for (std::size_t v = 0; v < d.nodes().size(); ++v) {
    const Node& n = d.nodes()[v];
    nlohmann::json j;
    j["id"] = id(static_cast<int>(v));
    j["kind"] = gen_name(n.kind);
    j["arity"] = n.arity;
    if (!n.label.empty()) j["label"] = n.label;
    if (n.parent == kBoundary)
      j["parent"] = nullptr;
    else
      j["parent"] = id(n.parent);
    nodes[v] = j;
    for (std::size_t i = 0; i < n.inputs.size(); ++i) {
      wires.push_back({{"from", endpoint(n.inputs[i], "domain", true)},
                       {"to", endpoint({static_cast<int>(v), static_cast<int>(i)}, "", false)},
                       {"type", d.source_type(n.inputs[i]).to_string()}});
    }
  }
  for (std::size_t j = 0; j < d.outputs().size(); ++j) {
    wires.push_back({{"from", endpoint(d.outputs()[j], "domain", true)},
                     {"to", endpoint({kBoundary, static_cast<int>(j)}, "codomain", false)},
                     {"type", d.codomain()[j].to_string()}});
  }
  std::sort(nodes.begin(), nodes.end(),
            [](const nlohmann::json& a, const nlohmann::json& b) {
              return a["id"].get<int>() < b["id"].get<int>();
            });
  out["nodes"] = nodes;
  std::sort(wires.begin(), wires.end(),
            [](const nlohmann::json& a, const nlohmann::json& b) {
              return a.dump() < b.dump();
            });
  out["wires"] = wires;
  return out;
}

std::string to_dot(const Diagram& d) {
  const auto rank = canonical_labeling(d).node_rank;
  auto name = [&](int v) { return "n" + std::to_string(rank[static_cast<std::size_t>(v)]); };
  const int n = static_cast<int>(d.nodes().size());
  std::vector<std::vector<int>> children(static_cast<std::size_t>(n));
  std::vector<int> top;
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(rank[static_cast<std::size_t>(v)])] = v;
  for (int v : order) {
    int p = d.node(v).parent;
    (p == kBoundary ? top : children[static_cast<std::size_t>(p)]).push_back(v);
  }

  std::ostringstream os;
  os << "digraph diagram {\n  rankdir=TB;\n  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t j = 0; j < d.domain().size(); ++j)
    os << "  d" << j << " [shape=point, xlabel=\"" << d.domain()[j].to_string() << "\"];\n";
  for (std::size_t j = 0; j < d.codomain().size(); ++j)
    os << "  c" << j << " [shape=point, xlabel=\"" << d.codomain()[j].to_string() << "\"];\n";

  auto label = [&](int v) {
    const Node& nd = d.node(v);
    std::string l = gen_name(nd.kind);
    if (nd.kind == Gen::kNameConst) l += " " + nd.label;
    if (nd.kind == Gen::kParam) l += " " + std::to_string(nd.arity);
    else if (nd.kind != Gen::kDrop && nd.kind != Gen::kZero && nd.kind != Gen::kFresh &&
             nd.kind != Gen::kComm && nd.kind != Gen::kNameConst)
      l += "/" + std::to_string(nd.arity);
    return l;
  };
  auto emit = [&](auto&& self, int v, int depth) -> void {
    std::string pad(static_cast<std::size_t>(2 * depth), ' ');
    if (d.node(v).kind == Gen::kCurry) {
      os << pad << "subgraph cluster_" << name(v) << " {\n"
         << pad << "  style=rounded;\n";
      for (int c : children[static_cast<std::size_t>(v)]) self(self, c, depth + 1);
      os << pad << "}\n";
    }
    os << pad << name(v) << " [label=\"" << label(v) << "\"];\n";
  };
  for (int v : top) emit(emit, v, 1);

  auto src = [&](Endpoint e) {
    return e.node == kBoundary ? "d" + std::to_string(e.port) : name(e.node);
  };
  std::vector<std::string> edges;
  for (int v : order) {
    const Node& nd = d.node(v);
    for (std::size_t i = 0; i < nd.inputs.size(); ++i)
      edges.push_back("  " + src(nd.inputs[i]) + " -> " + name(v) + " [label=\"" +
                      d.source_type(nd.inputs[i]).to_string() + "\"];\n");
  }
  std::sort(edges.begin(), edges.end());
  for (const auto& e : edges) os << e;
  for (std::size_t j = 0; j < d.outputs().size(); ++j)
    os << "  " << src(d.outputs()[j]) << " -> c" << j << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace pitwo
