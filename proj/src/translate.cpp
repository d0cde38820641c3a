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

#include "pitwo/translate.hpp"

#include <map>
#include <utility>

#include "pitwo/error.hpp"

namespace pitwo {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

using Env = std::map<Name, int>;

// Builds the port graph top-down. Name uses are recorded per source and
// wired up at the end, so multiplicity is known before fans are placed.
class Builder {
 public:
  explicit Builder(const std::vector<Name>& free)
      : d_(std::vector<PortType>(free.size(), PortType::name()), {PortType::proc()}) {
    for (std::size_t j = 0; j < free.size(); ++j)
      env_[free[j]] = add_root({kBoundary, static_cast<int>(j)}, kBoundary);
  }

  const Env& env() const { return env_; }

  Endpoint build(const Process& p, int scope, const Env& env) {
    switch (p.tag()) {
      case Tag::kStop:
        return {node(Gen::kZero, 0, scope, 0), 0};
      case Tag::kOutput: {
        const auto& o = p.as_output();
        const int n = static_cast<int>(o.args.size());
        const int v = node(Gen::kOutput, n, scope, n + 1);
        use(env, o.subject, {v, 0});
        for (int i = 0; i < n; ++i) use(env, o.args[static_cast<std::size_t>(i)], {v, i + 1});
        return {v, 0};
      }
      case Tag::kInput: {
        const auto& in = p.as_input();
        const int n = static_cast<int>(in.params.size());
        const int v = node(Gen::kInput, n, scope, 2);
        use(env, in.subject, {v, 0});
        const int box = node(Gen::kCurry, n, scope, 1);
        Env inner = env;
        for (int i = 0; i < n; ++i) {
          const int param = node(Gen::kParam, i, box, 0);
          inner[in.params[static_cast<std::size_t>(i)]] = add_root({param, 0}, box);
        }
        d_.node(box).inputs[0] = build(in.body, box, inner);
        d_.node(v).inputs[1] = {box, 0};
        return {v, 0};
      }
      case Tag::kNew: {
        const auto& nw = p.as_new();
        const int f = node(Gen::kFresh, 0, scope, 0);
        Env inner = env;
        inner[nw.binder] = add_root({f, 0}, scope);
        return build(nw.body, scope, inner);
      }
      case Tag::kPar: {
        const auto& pr = p.as_par();
        const int v = node(Gen::kPar, 2, scope, 2);
        d_.node(v).inputs[0] = build(pr.left, scope, env);
        d_.node(v).inputs[1] = build(pr.right, scope, env);
        return {v, 0};
      }
    }
    return {};
  }

  Endpoint build_context(const std::vector<ContextFrame>& frames, std::size_t i,
                         const std::vector<Name>& hole_names, int scope,
                         const Env& env) {
    if (i == frames.size()) {
      const int k = static_cast<int>(hole_names.size());
      const int h = node(Gen::kHole, k, scope, k);
      for (int j = 0; j < k; ++j) use(env, hole_names[static_cast<std::size_t>(j)], {h, j});
      return {h, 0};
    }
    return std::visit(
        Overloaded{
            [&](const InputFrame& f) -> Endpoint {
              const int n = static_cast<int>(f.params.size());
              const int v = node(Gen::kInput, n, scope, 2);
              use(env, f.subject, {v, 0});
              const int box = node(Gen::kCurry, n, scope, 1);
              Env inner = env;
              for (int j = 0; j < n; ++j) {
                const int param = node(Gen::kParam, j, box, 0);
                inner[f.params[static_cast<std::size_t>(j)]] = add_root({param, 0}, box);
              }
              d_.node(box).inputs[0] = build_context(frames, i + 1, hole_names, box, inner);
              d_.node(v).inputs[1] = {box, 0};
              return {v, 0};
            },
            [&](const NewFrame& f) -> Endpoint {
              const int fresh = node(Gen::kFresh, 0, scope, 0);
              Env inner = env;
              inner[f.binder] = add_root({fresh, 0}, scope);
              return build_context(frames, i + 1, hole_names, scope, inner);
            },
            [&](const ParLeftFrame& f) -> Endpoint {
              const int v = node(Gen::kPar, 2, scope, 2);
              d_.node(v).inputs[0] = build_context(frames, i + 1, hole_names, scope, env);
              d_.node(v).inputs[1] = build(f.right, scope, env);
              return {v, 0};
            },
            [&](const ParRightFrame& f) -> Endpoint {
              const int v = node(Gen::kPar, 2, scope, 2);
              d_.node(v).inputs[0] = build(f.left, scope, env);
              d_.node(v).inputs[1] = build_context(frames, i + 1, hole_names, scope, env);
              return {v, 0};
            },
        },
        frames[i]);
  }

  Diagram finish(Endpoint result) {
    d_.set_output(0, result);
    for (std::size_t r = 0; r < roots_.size(); ++r) {
      const auto& sinks = uses_[r];
      const auto [source, scope] = roots_[r];
      if (sinks.empty()) {
        Node drop;
        drop.kind = Gen::kDrop;
        drop.parent = scope;
        drop.inputs = {source};
        d_.add_node(std::move(drop));
      } else {
        fan(source, scope, sinks, 0);
      }
    }
    return d_;
  }

 private:
  int node(Gen kind, int arity, int parent, int inputs) {
    Node n;
    n.kind = kind;
    n.arity = arity;
    n.parent = parent;
    n.inputs.resize(static_cast<std::size_t>(inputs));
    return d_.add_node(std::move(n));
  }

  int add_root(Endpoint source, int scope) {
    roots_.emplace_back(source, scope);
    uses_.emplace_back();
    return static_cast<int>(roots_.size()) - 1;
  }

  void use(const Env& env, const Name& x, Endpoint sink) {
    auto it = env.find(x);
    if (it == env.end()) throw Error("unbound name " + x.str() + " during translation");
    uses_[static_cast<std::size_t>(it->second)].push_back(sink);
  }

  // Right comb of binary Dups: first use taken off, the rest shared below.
  void fan(Endpoint source, int scope, const std::vector<Endpoint>& sinks,
           std::size_t from) {
    if (from + 1 == sinks.size()) {
      d_.connect(source, sinks[from]);
      return;
    }
    const int dup = node(Gen::kDup, 2, scope, 1);
    d_.node(dup).inputs[0] = source;
    d_.connect({dup, 0}, sinks[from]);
    fan({dup, 1}, scope, sinks, from + 1);
  }

  Diagram d_;
  Env env_;
  std::vector<std::pair<Endpoint, int>> roots_;
  std::vector<std::vector<Endpoint>> uses_;
};

std::vector<Name> sorted_free(const Process& p) {
  auto fn = free_names(p);
  return {fn.begin(), fn.end()};
}

std::string print_tight(const Process& p) {
  return p.tag() == Tag::kPar ? "(" + print(p) + ")" : print(p);
}

std::string join(const std::vector<Name>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) out += ",";
    out += names[i].str();
  }
  return out;
}

}  // namespace

Diagram translate(const Process& p) { return translate(p, sorted_free(p)); }

Diagram translate(const Process& p, const std::vector<Name>& interface) {
  Builder b(interface);
  Endpoint out = b.build(p, kBoundary, b.env());
  return b.finish(out);
}

TopDiagram close_top(const Diagram& open, const std::vector<Name>& free_names,
                     int catalysts, bool instantiate) {
  if (catalysts < 0) throw InterfaceMismatch("negative catalyst count");
  Diagram d = open;
  for (int i = 0; i < catalysts; ++i) d = tensor(d, Diagram::generator(Gen::kComm));
  if (catalysts > 0) d = compose(d, Diagram::generator(Gen::kPar, catalysts + 1));
  if (instantiate) {
    if (free_names.size() != open.domain().size())
      throw InterfaceMismatch("name list does not match the open ports");
    Diagram consts;
    for (const auto& x : free_names)
      consts = tensor(consts, Diagram::generator(Gen::kNameConst, 0, x.str()));
    d = compose(consts, d);
  }
  return {normalize(d), free_names, catalysts, instantiate};
}

TopDiagram translate_top(const Process& p, int catalysts, bool instantiate) {
  return close_top(translate(p), sorted_free(p), catalysts, instantiate);
}

Context Context::under_input(Name subject, std::vector<Name> params) const {
  Context c = *this;
  c.frames_.insert(c.frames_.begin(), InputFrame{std::move(subject), std::move(params)});
  return c;
}

Context Context::under_new(Name binder) const {
  Context c = *this;
  c.frames_.insert(c.frames_.begin(), NewFrame{std::move(binder)});
  return c;
}

Context Context::par_left(Process right) const {
  Context c = *this;
  c.frames_.insert(c.frames_.begin(), ParLeftFrame{std::move(right)});
  return c;
}

Context Context::par_right(Process left) const {
  Context c = *this;
  c.frames_.insert(c.frames_.begin(), ParRightFrame{std::move(left)});
  return c;
}

Process Context::plug(const Process& p) const {
  Process out = p;
  for (auto it = frames_.rbegin(); it != frames_.rend(); ++it) {
    out = std::visit(
        Overloaded{
            [&](const InputFrame& f) { return Process::input(f.subject, f.params, out); },
            [&](const NewFrame& f) { return Process::restrict(f.binder, out); },
            [&](const ParLeftFrame& f) { return Process::par(out, f.right); },
            [&](const ParRightFrame& f) { return Process::par(f.left, out); },
        },
        *it);
  }
  return out;
}

std::size_t Context::size() const {
  std::size_t n = 1;
  for (const auto& f : frames_) {
    n += 1;
    if (const auto* l = std::get_if<ParLeftFrame>(&f)) n += l->right.size();
    if (const auto* r = std::get_if<ParRightFrame>(&f)) n += r->left.size();
  }
  return n;
}

std::string Context::print() const {
  auto rec = [&](auto&& self, std::size_t i, bool tight) -> std::string {
    if (i == frames_.size()) return "[]";
    return std::visit(
        Overloaded{
            [&](const InputFrame& f) {
              return f.subject.str() + "?(" + join(f.params) + ") => " + self(self, i + 1, true);
            },
            [&](const NewFrame& f) {
              std::string body = self(self, i + 1, true);
              return "(new " + f.binder.str() + ")" + (body[0] == '(' ? "" : " ") + body;
            },
            [&](const ParLeftFrame& f) {
              std::string s = self(self, i + 1, false) + " | " + print_tight(f.right);
              return tight ? "(" + s + ")" : s;
            },
            [&](const ParRightFrame& f) {
              std::string s = pitwo::print(f.left) + " | " + self(self, i + 1, true);
              return tight ? "(" + s + ")" : s;
            },
        },
        frames_[i]);
  };
  return rec(rec, 0, false);
}

DiagramContext translate_context(const Context& c, const std::vector<Name>& hole_names) {
  std::vector<Process> probes;
  for (const auto& h : hole_names) probes.push_back(Process::output(h, {}));
  auto free = sorted_free(c.plug(Process::par_all(probes)));
  Builder b(free);
  Endpoint out = b.build_context(c.frames(), 0, hole_names, kBoundary, b.env());
  return {b.finish(out), hole_names, free};
}

Diagram plug(const DiagramContext& c, const Diagram& f) {
  const std::vector<PortType> want(c.hole_names.size(), PortType::name());
  if (f.domain() != want || f.codomain() != std::vector<PortType>{PortType::proc()})
    throw InterfaceMismatch("hole expects " + ObjectExpr(want).to_string() +
                            " -> P, got " + f.domain_object().to_string() + " -> " +
                            f.codomain_object().to_string());
  Diagram d = c.diagram;
  int hole = kBoundary;
  for (int v = 0; v < static_cast<int>(d.nodes().size()); ++v)
    if (d.node(v).kind == Gen::kHole) hole = v;
  if (hole == kBoundary) throw InterfaceMismatch("context has no hole");
  const Node slot = d.node(hole);
  const int offset = static_cast<int>(d.nodes().size());
  auto map = [&](Endpoint e) {
    if (e.node == kBoundary) return slot.inputs.at(static_cast<std::size_t>(e.port));
    return Endpoint{e.node + offset, e.port};
  };
  for (const Node& n : f.nodes()) {
    Node copy = n;
    copy.parent = n.parent == kBoundary ? slot.parent : n.parent + offset;
    for (auto& e : copy.inputs) e = map(e);
    d.add_node(std::move(copy));
  }
  const Endpoint result = map(f.outputs()[0]);
  const auto cons = d.consumers();
  auto it = cons.find({hole, 0});
  if (it != cons.end()) d.connect(result, it->second);
  std::vector<bool> dead(d.nodes().size(), false);
  dead[static_cast<std::size_t>(hole)] = true;
  d.erase_nodes(dead);
  return d;
}

}  // namespace pitwo
