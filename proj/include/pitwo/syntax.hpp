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

#ifndef PITWO_SYNTAX_HPP_
#define PITWO_SYNTAX_HPP_

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

namespace pitwo {

/// Channel identifier. Compared by its spelling.
class Name {
 public:
  Name() = default;
  /// Throws std::invalid_argument unless `id` matches [a-zA-Z][a-zA-Z0-9_]*.
  explicit Name(std::string id);

  const std::string& str() const { return id_; }

  friend bool operator==(const Name&, const Name&) = default;
  friend auto operator<=>(const Name& a, const Name& b) { return a.id_ <=> b.id_; }

 private:
  std::string id_;
};

bool is_identifier(std::string_view text);

using NameSet = std::set<Name>;
using Substitution = std::map<Name, Name>;

class Process;

struct StopNode {};

struct InputNode;
struct OutputNode;
struct NewNode;
struct ParNode;

enum class Tag { kStop, kInput, kOutput, kNew, kPar };

/// Immutable process term with shared structure. Copying is cheap.
class Process {
 public:
  /// The stopped process.
  Process();

  static Process stop();
  /// Throws std::invalid_argument when `params` contains duplicates.
  static Process input(Name subject, std::vector<Name> params, Process body);
  static Process output(Name subject, std::vector<Name> args);
  static Process restrict(Name binder, Process body);
  static Process par(Process left, Process right);
  /// Right fold of `par` over the list; the empty list is `stop()`.
  static Process par_all(const std::vector<Process>& parts);

  Tag tag() const;
  bool is_stop() const { return tag() == Tag::kStop; }

  const InputNode& as_input() const;
  const OutputNode& as_output() const;
  const NewNode& as_new() const;
  const ParNode& as_par() const;

  /// Number of constructors in the tree.
  std::size_t size() const;
  /// Number of input and output prefixes.
  std::size_t prefix_count() const;

  /// Structural (not alpha) equality.
  friend bool operator==(const Process& a, const Process& b);

  struct Node;

 private:
  explicit Process(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct InputNode {
  Name subject;
  std::vector<Name> params;
  Process body;
};

struct OutputNode {
  Name subject;
  std::vector<Name> args;
};

struct NewNode {
  Name binder;
  Process body;
};

struct ParNode {
  Process left;
  Process right;
};

NameSet free_names(const Process& p);
/// Free and bound names occurring anywhere in `p`, binders included.
NameSet all_names(const Process& p);

/// Alpha-invariant rendering: bound occurrences become de Bruijn indices.
std::string alpha_key(const Process& p);
bool alpha_eq(const Process& p, const Process& q);

/// Capture-avoiding simultaneous substitution. Entries whose key is not free
/// in `p` have no effect.
Process substitute(const Process& p, const Substitution& subst);

/// Smallest name of the form n0, n1, ... not in `avoid`.
Name fresh_name(const NameSet& avoid);

/// Parses the ASCII grammar. Throws ParseError with a 1-based position.
Process parse(std::string_view text);
/// Prints with minimal parentheses; parse(print(p)) == p.
std::string print(const Process& p);

nlohmann::json to_json(const Process& p);
Process process_from_json(const nlohmann::json& j);

}  // namespace pitwo

#endif  // PITWO_SYNTAX_HPP_
