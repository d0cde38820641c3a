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

#ifndef PITWO_DIAGRAM_HPP_
#define PITWO_DIAGRAM_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace pitwo {

enum class WireKind { kName, kProc, kHom };

/// Type of a single wire: 𝒩, 𝒫, or the internal hom 𝒩^⊗n ⊸ 𝒫.
struct PortType {
  WireKind kind = WireKind::kName;
  int arity = 0;  // kHom only

  static PortType name() { return {WireKind::kName, 0}; }
  static PortType proc() { return {WireKind::kProc, 0}; }
  static PortType hom(int n) { return {WireKind::kHom, n}; }

  std::string to_string() const;
  friend bool operator==(const PortType&, const PortType&) = default;
  friend auto operator<=>(const PortType&, const PortType&) = default;
};

/// Object of the monoidal category. Tensors are kept flat: the unit is the
/// empty product and nested tensors are concatenated.
class ObjectExpr {
 public:
  ObjectExpr() = default;
  explicit ObjectExpr(std::vector<PortType> factors) : factors_(std::move(factors)) {}

  static ObjectExpr unit() { return {}; }
  static ObjectExpr name() { return ObjectExpr({PortType::name()}); }
  static ObjectExpr proc() { return ObjectExpr({PortType::proc()}); }
  static ObjectExpr hom(int n) { return ObjectExpr({PortType::hom(n)}); }
  static ObjectExpr power(PortType t, int n) {
    return ObjectExpr(std::vector<PortType>(static_cast<std::size_t>(n), t));
  }
  static ObjectExpr tensor(const ObjectExpr& a, const ObjectExpr& b);

  const std::vector<PortType>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }
  std::string to_string() const;

  friend bool operator==(const ObjectExpr&, const ObjectExpr&) = default;

 private:
  std::vector<PortType> factors_;
};

/// Generators of the signature, plus the bookkeeping kinds Param (a curry
/// box's designated input) and Hole (the slot of a diagram context).
enum class Gen {
  kDup,        // 𝒩 → 𝒩^⊗k   (k = arity; the generator proper has k = 2)
  kDrop,       // 𝒩 → I
  kPar,        // 𝒫^⊗m → 𝒫   (m = arity; the generator proper has m = 2)
  kZero,       // I → 𝒫
  kInput,      // 𝒩 ⊗ (𝒩^⊗n ⊸ 𝒫) → 𝒫
  kOutput,     // 𝒩 ⊗ 𝒩^⊗n → 𝒫
  kFresh,      // I → 𝒩
  kComm,       // I → 𝒫
  kNameConst,  // I → 𝒩, picks out `label`
  kCurry,      // box body 𝒫 → (𝒩^⊗n ⊸ 𝒫)
  kEv,         // (𝒩^⊗n ⊸ 𝒫) ⊗ 𝒩^⊗n → 𝒫
  kParam,      // I → 𝒩, designated input `arity` of the enclosing box
  kHole,       // 𝒩^⊗k → 𝒫
};

const char* gen_name(Gen g);

inline constexpr int kBoundary = -1;

/// A port: (node, index). With node == kBoundary it is a domain port when
/// used as a source and a codomain port when used as a sink.
struct Endpoint {
  int node = kBoundary;
  int port = 0;
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
  friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

struct Node {
  Gen kind = Gen::kZero;
  int arity = 0;
  std::string label;
  /// Enclosing curry box, or kBoundary at top level. A box's contents may
  /// consume wires from any enclosing level; its 𝒫 result feeds the box.
  int parent = kBoundary;
  /// Source feeding each input port.
  std::vector<Endpoint> inputs;
};

std::vector<PortType> input_types(const Node& n);
std::vector<PortType> output_types(const Node& n);
/// Ports whose order carries no meaning (commutativity / cocommutativity).
bool symmetric_inputs(Gen g);
bool symmetric_outputs(Gen g);

/// A 1-morphism as an interfaced port graph. Wire crossings are not
/// recorded, so the symmetric monoidal equations hold by construction.
class Diagram {
 public:
  Diagram() = default;
  Diagram(std::vector<PortType> domain, std::vector<PortType> codomain);

  static Diagram identity(const std::vector<PortType>& types);
  static Diagram swap(PortType a, PortType b);
  /// Single generator with its natural interface. Not for kCurry, kParam.
  static Diagram generator(Gen kind, int arity = 0, std::string label = {});

  const std::vector<PortType>& domain() const { return domain_; }
  const std::vector<PortType>& codomain() const { return codomain_; }
  ObjectExpr domain_object() const { return ObjectExpr(domain_); }
  ObjectExpr codomain_object() const { return ObjectExpr(codomain_); }

  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }
  Node& node(int id) { return nodes_[static_cast<std::size_t>(id)]; }
  /// Source feeding each codomain port.
  const std::vector<Endpoint>& outputs() const { return outputs_; }

  int add_node(Node n);
  void set_output(std::size_t index, Endpoint source);
  /// Points `sink` (an input port or a codomain port) at `source`.
  void connect(Endpoint source, Endpoint sink);
  PortType source_type(Endpoint source) const;
  /// Sink consuming each source.
  std::map<Endpoint, Endpoint> consumers() const;
  /// Deletes the flagged nodes and renumbers the rest in order.
  void erase_nodes(const std::vector<bool>& dead);

  std::size_t count(Gen kind) const;

 private:
  std::vector<PortType> domain_;
  std::vector<PortType> codomain_;
  std::vector<Node> nodes_;
  std::vector<Endpoint> outputs_;
};

/// Typing, linearity, scoping, and acyclicity problems; empty when sound.
std::vector<std::string> check_well_formed(const Diagram& d);

/// Sequential composition f ; g. Throws InterfaceMismatch.
Diagram compose(const Diagram& f, const Diagram& g);
Diagram tensor(const Diagram& f, const Diagram& g);
/// Boxes `body` (first n domain ports designated, codomain 𝒫) into a
/// closure of type 𝒩^⊗n ⊸ 𝒫; the remaining domain ports stay as captured
/// inputs of the result. Throws InterfaceMismatch.
Diagram curry(int n, const Diagram& body);
/// compose(tensor(thunk, args), ev_n). Throws InterfaceMismatch.
Diagram apply_ev(const Diagram& thunk, const Diagram& args);

struct NormalizeOptions {
  /// Delete closed I → I pieces (a name source whose only use is a drop).
  bool scalar_gc = true;
};

/// Normal form: Ev-over-Curry beta steps; one fan-out per name source with
/// drop branches pruned; parallel trees flattened with 0 units removed.
Diagram normalize(const Diagram& d, const NormalizeOptions& options = {});

struct CanonicalLabeling {
  std::string encoding;
  /// Canonical rank of each node.
  std::vector<int> node_rank;
};

/// Canonical labeling of `d` exactly as given (no normalization).
CanonicalLabeling canonical_labeling(const Diagram& d);
/// Encoding of normalize(d); equal diagrams have equal encodings.
std::string canonical_key(const Diagram& d, const NormalizeOptions& options = {});
std::uint64_t canonical_hash(const Diagram& d);
bool equal(const Diagram& a, const Diagram& b, const NormalizeOptions& options = {});

nlohmann::json to_json(const Diagram& d);
/// Node ids follow the canonical labeling, so equal diagrams print alike.
std::string to_dot(const Diagram& d);

}  // namespace pitwo

#endif  // PITWO_DIAGRAM_HPP_
