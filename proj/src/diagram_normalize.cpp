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

#include <map>
#include <vector>

#include "pitwo/diagram.hpp"

namespace pitwo {

namespace {

class Normalizer {
 public:
  Normalizer(const Diagram& d, const NormalizeOptions& options)
      : d_(d), options_(options), dead_(d.nodes().size(), false) {}

  Diagram run() {
    beta();
    fans();
    flatten();
    d_.erase_nodes(dead_);
    return d_;
  }

 private:
  int size() const { return static_cast<int>(d_.nodes().size()); }
  bool alive(int v) const { return v != kBoundary && !dead_[static_cast<std::size_t>(v)]; }
  bool is(Endpoint e, Gen g) const {
    return e.node != kBoundary && alive(e.node) && d_.node(e.node).kind == g;
  }
  void kill(int v) { dead_[static_cast<std::size_t>(v)] = true; }
  int add(Node n) {
    dead_.push_back(false);
    return d_.add_node(std::move(n));
  }
  std::map<Endpoint, Endpoint> consumers() const {
    std::map<Endpoint, Endpoint> out;
    for (int v = 0; v < size(); ++v) {
      if (!alive(v)) continue;
      const auto& ins = d_.node(v).inputs;
      for (std::size_t i = 0; i < ins.size(); ++i)
        out[ins[i]] = {v, static_cast<int>(i)};
    }
    for (std::size_t j = 0; j < d_.outputs().size(); ++j)
      out[d_.outputs()[j]] = {kBoundary, static_cast<int>(j)};
    return out;
  }

  // ev ∘ (curry(body) ⊗ args) = body[args/params]
  void beta() {
    for (bool again = true; again;) {
      again = false;
      for (int e = 0; e < size(); ++e) {
        if (!alive(e) || d_.node(e).kind != Gen::kEv) continue;
        Endpoint hom = d_.node(e).inputs[0];
        if (!is(hom, Gen::kCurry)) continue;
        const int c = hom.node;
        auto cons = consumers();
        const auto args = d_.node(e).inputs;
        for (int p = 0; p < size(); ++p) {
          if (!alive(p) || d_.node(p).parent != c || d_.node(p).kind != Gen::kParam)
            continue;
          auto it = cons.find({p, 0});
          if (it != cons.end())
            d_.connect(args[static_cast<std::size_t>(d_.node(p).arity) + 1], it->second);
          kill(p);
        }
        auto it = cons.find({e, 0});
        if (it != cons.end()) d_.connect(d_.node(c).inputs[0], it->second);
        const int outer = d_.node(e).parent;
        for (int v = 0; v < size(); ++v)
          if (alive(v) && d_.node(v).parent == c) d_.node(v).parent = outer;
        kill(c);
        kill(e);
        again = true;
      }
    }
  }

  // One fan-out per name source; drop branches pruned.
  void fans() {
    auto cons = consumers();
    std::vector<Endpoint> roots;
    for (std::size_t j = 0; j < d_.domain().size(); ++j)
      if (d_.domain()[j] == PortType::name())
        roots.push_back({kBoundary, static_cast<int>(j)});
    for (int v = 0; v < size(); ++v) {
      if (!alive(v)) continue;
      Gen k = d_.node(v).kind;
      if (k == Gen::kFresh || k == Gen::kNameConst || k == Gen::kParam)
        roots.push_back({v, 0});
    }
    std::vector<std::vector<Endpoint>> uses(roots.size());
    for (std::size_t r = 0; r < roots.size(); ++r) collect(cons, roots[r], uses[r]);
    for (int v = 0; v < size(); ++v)
      if (alive(v) && (d_.node(v).kind == Gen::kDup || d_.node(v).kind == Gen::kDrop))
        kill(v);
    for (std::size_t r = 0; r < roots.size(); ++r) {
      const Endpoint root = roots[r];
      const int scope = root.node == kBoundary ? kBoundary : d_.node(root.node).parent;
      const auto& sinks = uses[r];
      if (sinks.empty()) {
        bool closed = root.node != kBoundary && d_.node(root.node).kind != Gen::kParam;
        if (options_.scalar_gc && closed) {
          kill(root.node);
        } else {
          Node drop;
          drop.kind = Gen::kDrop;
          drop.parent = scope;
          drop.inputs = {root};
          add(std::move(drop));
        }
      } else if (sinks.size() == 1) {
        d_.connect(root, sinks[0]);
      } else {
        Node dup;
        dup.kind = Gen::kDup;
        dup.arity = static_cast<int>(sinks.size());
        dup.parent = scope;
        dup.inputs = {root};
        const int id = add(std::move(dup));
        for (std::size_t i = 0; i < sinks.size(); ++i)
          d_.connect({id, static_cast<int>(i)}, sinks[i]);
      }
    }
  }

  void collect(const std::map<Endpoint, Endpoint>& cons, Endpoint src,
               std::vector<Endpoint>& sinks) const {
    auto it = cons.find(src);
    if (it == cons.end()) return;
    const Endpoint s = it->second;
    if (s.node != kBoundary && alive(s.node)) {
      const Node& n = d_.node(s.node);
      if (n.kind == Gen::kDrop) return;
      if (n.kind == Gen::kDup) {
        for (int k = 0; k < n.arity; ++k) collect(cons, {s.node, k}, sinks);
        return;
      }
    }
    sinks.push_back(s);
  }

  // Parallel composition as a flat commutative monoid with unit 0.
  void flatten() {
    for (bool again = true; again;) {
      again = false;
      for (int p = 0; p < size(); ++p) {
        if (!alive(p) || d_.node(p).kind != Gen::kPar) continue;
        std::vector<Endpoint> merged;
        for (const auto& src : d_.node(p).inputs) {
          if (is(src, Gen::kPar) && d_.node(src.node).parent == d_.node(p).parent) {
            const auto& inner = d_.node(src.node).inputs;
            merged.insert(merged.end(), inner.begin(), inner.end());
            kill(src.node);
            again = true;
          } else if (is(src, Gen::kZero)) {
            kill(src.node);
            again = true;
          } else {
            merged.push_back(src);
          }
        }
        d_.node(p).inputs = merged;
        d_.node(p).arity = static_cast<int>(merged.size());
        if (merged.size() <= 1) {
          auto cons = consumers();
          auto it = cons.find({p, 0});
          Endpoint replacement;
          if (merged.empty()) {
            Node zero;
            zero.kind = Gen::kZero;
            zero.parent = d_.node(p).parent;
            replacement = {add(std::move(zero)), 0};
          } else {
            replacement = merged[0];
          }
          if (it != cons.end()) d_.connect(replacement, it->second);
          kill(p);
          again = true;
        }
      }
    }
  }

  Diagram d_;
  NormalizeOptions options_;
  std::vector<bool> dead_;
};

}  // namespace

Diagram normalize(const Diagram& d, const NormalizeOptions& options) {
  return Normalizer(d, options).run();
}

}  // namespace pitwo
