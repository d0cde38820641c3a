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

#ifndef PITWO_TRANSLATE_HPP_
#define PITWO_TRANSLATE_HPP_

#include <string>
#include <variant>
#include <vector>

#include "pitwo/diagram.hpp"
#include "pitwo/syntax.hpp"

namespace pitwo {

/// ⟦p⟧ : 𝒩^⊗|fn(p)| → 𝒫, one domain port per free name in sorted order.
/// Not normalized: repeated names fan out through binary Dup trees and
/// unused ones end in Drop.
Diagram translate(const Process& p);
/// Same, over a chosen interface: `interface` must list every free name of
/// `p` (extra names are dropped).
Diagram translate(const Process& p, const std::vector<Name>& interface);

/// ⟦p⟧ in parallel with `catalysts` COMM components, normalized.
struct TopDiagram {
  Diagram diagram;
  /// Free name behind each domain port, or behind each NameConst node when
  /// instantiated (the domain is then I).
  std::vector<Name> free_names;
  int catalysts = 1;
  bool instantiated = false;
};

TopDiagram translate_top(const Process& p, int catalysts = 1, bool instantiate = true);
/// Puts catalysts (and name constants for the open ports named by
/// `free_names`) around an open 𝒩^⊗k → 𝒫 diagram and normalizes.
TopDiagram close_top(const Diagram& open, const std::vector<Name>& free_names,
                     int catalysts, bool instantiate);

/// One layer of a term context, outermost first in Context::frames().
struct InputFrame {
  Name subject;
  std::vector<Name> params;
};
struct NewFrame {
  Name binder;
};
struct ParLeftFrame {  // [·] | right
  Process right;
};
struct ParRightFrame {  // left | [·]
  Process left;
};
using ContextFrame = std::variant<InputFrame, NewFrame, ParLeftFrame, ParRightFrame>;

/// Term with exactly one hole. Plugging captures, as usual for contexts.
class Context {
 public:
  /// The hole itself.
  Context() = default;

  Context under_input(Name subject, std::vector<Name> params) const;
  Context under_new(Name binder) const;
  Context par_left(Process right) const;
  Context par_right(Process left) const;

  const std::vector<ContextFrame>& frames() const { return frames_; }
  Process plug(const Process& p) const;
  /// Constructors of the context, the hole counting as one.
  std::size_t size() const;
  std::string print() const;

 private:
  std::vector<ContextFrame> frames_;
};

/// ⟦C⟧ with its hole as a Hole node 𝒩^⊗k → 𝒫 reading `hole_names` at the
/// hole's position.
struct DiagramContext {
  Diagram diagram;
  std::vector<Name> hole_names;
  /// Names behind the domain ports.
  std::vector<Name> free_names;
};

DiagramContext translate_context(const Context& c, const std::vector<Name>& hole_names);
/// Replaces the hole by `f` : 𝒩^⊗k → 𝒫. Throws InterfaceMismatch.
Diagram plug(const DiagramContext& c, const Diagram& f);

}  // namespace pitwo

#endif  // PITWO_TRANSLATE_HPP_
