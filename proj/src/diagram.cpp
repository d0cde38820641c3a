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

#include "pitwo/diagram.hpp"

#include <algorithm>
#include <queue>
#include <utility>

#include "pitwo/error.hpp"

namespace pitwo {

std::string PortType::to_string() const {
  switch (kind) {
    case WireKind::kName:
      return "N";
    case WireKind::kProc:
      return "P";
    case WireKind::kHom:
      break;
  }
  if (arity == 0) return "I -o P";
  if (arity == 1) return "N -o P";
  return "N^" + std::to_string(arity) + " -o P";
}

ObjectExpr ObjectExpr::tensor(const ObjectExpr& a, const ObjectExpr& b) {
  std::vector<PortType> f = a.factors_;
  f.insert(f.end(), b.factors_.begin(), b.factors_.end());
  return ObjectExpr(std::move(f));
}

std::string ObjectExpr::to_string() const {
  if (factors_.empty()) return "I";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i > 0) out += " (x) ";
    bool wrap = factors_[i].kind == WireKind::kHom && factors_.size() > 1;
    out += wrap ? "(" + factors_[i].to_string() + ")" : factors_[i].to_string();
  }
  return out;
}

const char* gen_name(Gen g) {
  switch (g) {
    case Gen::kDup: return "dup";
    case Gen::kDrop: return "drop";
    case Gen::kPar: return "par";
    case Gen::kZero: return "zero";
    case Gen::kInput: return "in";
    case Gen::kOutput: return "out";
    case Gen::kFresh: return "fresh";
    case Gen::kComm: return "comm";
    case Gen::kNameConst: return "name";
    case Gen::kCurry: return "curry";
    case Gen::kEv: return "ev";
    case Gen::kParam: return "param";
    case Gen::kHole: return "hole";
  }
  return "?";
}

namespace {

std::vector<PortType> names(int n) {
  return std::vector<PortType>(static_cast<std::size_t>(n), PortType::name());
}

}  // namespace

std::vector<PortType> input_types(const Node& n) {
  switch (n.kind) {
    case Gen::kDup:
    case Gen::kDrop:
      return {PortType::name()};
    case Gen::kPar:
      return std::vector<PortType>(static_cast<std::size_t>(n.arity),
                                   PortType::proc());
    case Gen::kInput:
      return {PortType::name(), PortType::hom(n.arity)};
    case Gen::kOutput: {
      auto t = names(n.arity + 1);
      return t;
    }
    case Gen::kCurry:
      return {PortType::proc()};
    case Gen::kEv: {
      std::vector<PortType> t{PortType::hom(n.arity)};
      auto rest = names(n.arity);
      t.insert(t.end(), rest.begin(), rest.end());
      return t;
    }
    case Gen::kHole:
      return names(n.arity);
    case Gen::kZero:
    case Gen::kFresh:
    case Gen::kComm:
    case Gen::kNameConst:
    case Gen::kParam:
      return {};
  }
  return {};
}

std::vector<PortType> output_types(const Node& n) {
  switch (n.kind) {
    case Gen::kDup:
      return names(n.arity);
    case Gen::kDrop:
      return {};
    case Gen::kFresh:
    case Gen::kNameConst:
    case Gen::kParam:
      return {PortType::name()};
    case Gen::kCurry:
      return {PortType::hom(n.arity)};
    case Gen::kPar:
    case Gen::kZero:
    case Gen::kInput:
    case Gen::kOutput:
    case Gen::kComm:
    case Gen::kEv:
    case Gen::kHole:
      return {PortType::proc()};
  }
  return {};
}

bool symmetric_inputs(Gen g) { return g == Gen::kPar; }
bool symmetric_outputs(Gen g) { return g == Gen::kDup; }

Diagram::Diagram(std::vector<PortType> domain, std::vector<PortType> codomain)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      outputs_(codomain_.size()) {}

Diagram Diagram::identity(const std::vector<PortType>& types) {
  Diagram d(types, types);
  for (std::size_t i = 0; i < types.size(); ++i)
    d.outputs_[i] = {kBoundary, static_cast<int>(i)};
  return d;
}

Diagram Diagram::swap(PortType a, PortType b) {
  Diagram d({a, b}, {b, a});
  d.outputs_[0] = {kBoundary, 1};
  d.outputs_[1] = {kBoundary, 0};
  return d;
}

Diagram Diagram::generator(Gen kind, int arity, std::string label) {
  if (kind == Gen::kCurry || kind == Gen::kParam)
    throw InterfaceMismatch(std::string("no standalone generator for ") +
                            gen_name(kind));
  if (kind == Gen::kDup && arity == 0) arity = 2;
  if (kind == Gen::kPar && arity == 0) arity = 2;
  Node n;
  n.kind = kind;
  n.arity = arity;
  n.label = std::move(label);
  auto in = input_types(n);
  auto out = output_types(n);
  Diagram d(in, out);
  for (std::size_t i = 0; i < in.size(); ++i)
    n.inputs.push_back({kBoundary, static_cast<int>(i)});
  int id = d.add_node(std::move(n));
  for (std::size_t j = 0; j < out.size(); ++j)
    d.outputs_[j] = {id, static_cast<int>(j)};
  return d;
}

int Diagram::add_node(Node n) {
  nodes_.push_back(std::move(n));
  return static_cast<int>(nodes_.size()) - 1;
}

void Diagram::set_output(std::size_t index, Endpoint source) {
  outputs_.at(index) = source;
}

void Diagram::connect(Endpoint source, Endpoint sink) {
  if (sink.node == kBoundary)
    outputs_.at(static_cast<std::size_t>(sink.port)) = source;
  else
    node(sink.node).inputs.at(static_cast<std::size_t>(sink.port)) = source;
}

PortType Diagram::source_type(Endpoint source) const {
  if (source.node == kBoundary)
    return domain_.at(static_cast<std::size_t>(source.port));
  return output_types(node(source.node)).at(static_cast<std::size_t>(source.port));
}

std::map<Endpoint, Endpoint> Diagram::consumers() const {
  std::map<Endpoint, Endpoint> out;
  for (std::size_t v = 0; v < nodes_.size(); ++v) {
    const auto& ins = nodes_[v].inputs;
    for (std::size_t i = 0; i < ins.size(); ++i)
      out[ins[i]] = {static_cast<int>(v), static_cast<int>(i)};
  }
  for (std::size_t j = 0; j < outputs_.size(); ++j)
    out[outputs_[j]] = {kBoundary, static_cast<int>(j)};
  return out;
}

void Diagram::erase_nodes(const std::vector<bool>& dead) {
  std::vector<int> remap(nodes_.size(), kBoundary);
  std::vector<Node> kept;
  for (std::size_t v = 0; v < nodes_.size(); ++v) {
    if (v < dead.size() && dead[v]) continue;
    remap[v] = static_cast<int>(kept.size());
    kept.push_back(std::move(nodes_[v]));
  }
  auto fix = [&](Endpoint& e) {
    if (e.node != kBoundary) e.node = remap[static_cast<std::size_t>(e.node)];
  };
  for (auto& n : kept) {
    if (n.parent != kBoundary) n.parent = remap[static_cast<std::size_t>(n.parent)];
    for (auto& e : n.inputs) fix(e);
  }
  for (auto& e : outputs_) fix(e);
  nodes_ = std::move(kept);
}

std::size_t Diagram::count(Gen kind) const {
  return static_cast<std::size_t>(std::count_if(
      nodes_.begin(), nodes_.end(), [&](const Node& n) { return n.kind == kind; }));
}

std::vector<std::string> check_well_formed(const Diagram& d) {
  std::vector<std::string> problems;
  const int n = static_cast<int>(d.nodes().size());
  auto where = [](Endpoint e) {
    return e.node == kBoundary ? "boundary:" + std::to_string(e.port)
                               : std::to_string(e.node) + ":" + std::to_string(e.port);
  };
  std::map<Endpoint, int> uses;
  auto valid_source = [&](Endpoint s) {
    if (s.node == kBoundary)
      return s.port >= 0 && s.port < static_cast<int>(d.domain().size());
    if (s.node < 0 || s.node >= n) return false;
    return s.port >= 0 &&
           s.port < static_cast<int>(output_types(d.node(s.node)).size());
  };
  auto scope_of_source = [&](Endpoint s) {
    return s.node == kBoundary ? kBoundary : d.node(s.node).parent;
  };
  auto is_ancestor_or_self = [&](int a, int b) {
    for (int steps = 0; steps <= n; ++steps) {
      if (b == a) return true;
      if (b == kBoundary) return false;
      b = d.node(b).parent;
    }
    return false;
  };
  auto check_edge = [&](Endpoint s, PortType want, int sink_scope,
                        const std::string& sink) {
    if (!valid_source(s)) {
      problems.push_back(sink + " fed by missing port " + where(s));
      return;
    }
    ++uses[s];
    if (d.source_type(s) != want)
      problems.push_back(sink + " expects " + want.to_string() + " but gets " +
                         d.source_type(s).to_string());
    if (!is_ancestor_or_self(scope_of_source(s), sink_scope))
      problems.push_back(sink + " reaches into a box through " + where(s));
  };

  for (int v = 0; v < n; ++v) {
    const Node& node = d.node(v);
    if (node.parent != kBoundary &&
        (node.parent < 0 || node.parent >= n ||
         d.node(node.parent).kind != Gen::kCurry))
      problems.push_back("node " + std::to_string(v) + " has a bad parent");
    if (node.kind == Gen::kParam &&
        (node.parent == kBoundary || node.arity < 0 ||
         node.arity >= d.node(node.parent).arity))
      problems.push_back("param " + std::to_string(v) + " outside its box");
    auto types = input_types(node);
    if (types.size() != node.inputs.size()) {
      problems.push_back("node " + std::to_string(v) + " has " +
                         std::to_string(node.inputs.size()) + " inputs, expected " +
                         std::to_string(types.size()));
      continue;
    }
    for (std::size_t i = 0; i < types.size(); ++i) {
      int scope = node.kind == Gen::kCurry ? v : node.parent;
      check_edge(node.inputs[i], types[i], scope,
                 "port " + std::to_string(v) + ":" + std::to_string(i));
    }
  }
  if (d.outputs().size() != d.codomain().size()) {
    problems.push_back("codomain width mismatch");
  } else {
    for (std::size_t j = 0; j < d.outputs().size(); ++j)
      check_edge(d.outputs()[j], d.codomain()[j], kBoundary,
                 "codomain " + std::to_string(j));
  }
  for (std::size_t j = 0; j < d.domain().size(); ++j) {
    Endpoint s{kBoundary, static_cast<int>(j)};
    if (uses[s] != 1)
      problems.push_back("domain " + std::to_string(j) + " used " +
                         std::to_string(uses[s]) + " times");
  }
  for (int v = 0; v < n; ++v) {
    int outs = static_cast<int>(output_types(d.node(v)).size());
    for (int j = 0; j < outs; ++j) {
      Endpoint s{v, j};
      if (uses[s] != 1)
        problems.push_back("port " + where(s) + " used " +
                           std::to_string(uses[s]) + " times");
    }
  }

  // Data edges plus contents-before-box edges must form a DAG.
  std::vector<std::vector<int>> succ(static_cast<std::size_t>(n));
  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  auto edge = [&](int a, int b) {
    if (a < 0 || a >= n || b < 0 || b >= n) return;
    succ[static_cast<std::size_t>(a)].push_back(b);
    ++indeg[static_cast<std::size_t>(b)];
  };
  for (int v = 0; v < n; ++v) {
    for (const auto& s : d.node(v).inputs) edge(s.node, v);
    edge(v, d.node(v).parent);
  }
  std::queue<int> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[static_cast<std::size_t>(v)] == 0) ready.push(v);
  int seen = 0;
  while (!ready.empty()) {
    int v = ready.front();
    ready.pop();
    ++seen;
    for (int w : succ[static_cast<std::size_t>(v)])
      if (--indeg[static_cast<std::size_t>(w)] == 0) ready.push(w);
  }
  if (seen != n) problems.push_back("diagram has a cycle");
  return problems;
}

namespace {

// Appends g's nodes to `into`; g's domain port j is replaced by feed[j].
std::vector<Endpoint> splice(Diagram& into, const Diagram& g,
                             const std::vector<Endpoint>& feed) {
  const int offset = static_cast<int>(into.nodes().size());
  auto map = [&](Endpoint e) {
    if (e.node == kBoundary) return feed.at(static_cast<std::size_t>(e.port));
    return Endpoint{e.node + offset, e.port};
  };
  for (const Node& src : g.nodes()) {
    Node copy = src;
    if (copy.parent != kBoundary) copy.parent += offset;
    for (auto& e : copy.inputs) e = map(e);
    into.add_node(std::move(copy));
  }
  std::vector<Endpoint> outs;
  for (const auto& e : g.outputs()) outs.push_back(map(e));
  return outs;
}

std::string interface_text(const std::vector<PortType>& t) {
  return ObjectExpr(t).to_string();
}

}  // namespace

Diagram compose(const Diagram& f, const Diagram& g) {
  if (f.codomain() != g.domain())
    throw InterfaceMismatch("cannot compose " + interface_text(f.codomain()) +
                            " with " + interface_text(g.domain()));
  Diagram out(f.domain(), g.codomain());
  std::vector<Endpoint> id;
  for (std::size_t j = 0; j < f.domain().size(); ++j)
    id.push_back({kBoundary, static_cast<int>(j)});
  auto mid = splice(out, f, id);
  auto fin = splice(out, g, mid);
  for (std::size_t j = 0; j < fin.size(); ++j) out.set_output(j, fin[j]);
  return out;
}

Diagram tensor(const Diagram& f, const Diagram& g) {
  auto dom = f.domain();
  dom.insert(dom.end(), g.domain().begin(), g.domain().end());
  auto cod = f.codomain();
  cod.insert(cod.end(), g.codomain().begin(), g.codomain().end());
  Diagram out(dom, cod);
  std::vector<Endpoint> left, right;
  for (std::size_t j = 0; j < f.domain().size(); ++j)
    left.push_back({kBoundary, static_cast<int>(j)});
  for (std::size_t j = 0; j < g.domain().size(); ++j)
    right.push_back({kBoundary, static_cast<int>(f.domain().size() + j)});
  auto a = splice(out, f, left);
  auto b = splice(out, g, right);
  a.insert(a.end(), b.begin(), b.end());
  for (std::size_t j = 0; j < a.size(); ++j) out.set_output(j, a[j]);
  return out;
}

Diagram curry(int n, const Diagram& body) {
  if (n < 0 || static_cast<std::size_t>(n) > body.domain().size())
    throw InterfaceMismatch("curry arity exceeds the body's domain");
  for (int i = 0; i < n; ++i)
    if (body.domain()[static_cast<std::size_t>(i)] != PortType::name())
      throw InterfaceMismatch("curried ports must be names");
  if (body.codomain() != std::vector<PortType>{PortType::proc()})
    throw InterfaceMismatch("curry body must produce a single process, got " +
                            interface_text(body.codomain()));
  std::vector<PortType> rest(body.domain().begin() + n, body.domain().end());
  Diagram out(rest, {PortType::hom(n)});
  Node box;
  box.kind = Gen::kCurry;
  box.arity = n;
  box.inputs.push_back({});
  const int c = out.add_node(box);
  std::vector<Endpoint> feed;
  for (int i = 0; i < n; ++i) {
    Node p;
    p.kind = Gen::kParam;
    p.arity = i;
    p.parent = c;
    feed.push_back({out.add_node(std::move(p)), 0});
  }
  for (std::size_t j = 0; j < rest.size(); ++j)
    feed.push_back({kBoundary, static_cast<int>(j)});
  const int first = static_cast<int>(out.nodes().size());
  auto result = splice(out, body, feed);
  for (int v = first; v < static_cast<int>(out.nodes().size()); ++v)
    if (out.node(v).parent == kBoundary) out.node(v).parent = c;
  out.node(c).inputs[0] = result[0];
  out.set_output(0, {c, 0});
  return out;
}

Diagram apply_ev(const Diagram& thunk, const Diagram& args) {
  if (thunk.codomain().size() != 1 || thunk.codomain()[0].kind != WireKind::kHom)
    throw InterfaceMismatch("ev needs a closure, got " +
                            interface_text(thunk.codomain()));
  int n = thunk.codomain()[0].arity;
  return compose(tensor(thunk, args), Diagram::generator(Gen::kEv, n));
}

}  // namespace pitwo
