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

#include "pitwo/syntax.hpp"

#include <algorithm>
#include <stdexcept>

namespace pitwo {

bool is_identifier(std::string_view text) {
  if (text.empty()) return false;
  auto alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(text.front())) return false;
  return std::all_of(text.begin() + 1, text.end(),
                     [&](char c) { return alpha(c) || digit(c) || c == '_'; });
}

Name::Name(std::string id) : id_(std::move(id)) {
  if (!is_identifier(id_)) {
    throw std::invalid_argument("invalid name '" + id_ + "'");
  }
}

struct Process::Node {
  std::variant<StopNode, InputNode, OutputNode, NewNode, ParNode> value;
  std::size_t size = 1;
  std::size_t prefixes = 0;
};

namespace {

const std::shared_ptr<const Process::Node>& stop_node() {
  static const auto node = std::make_shared<const Process::Node>();
  return node;
}

}  // namespace

Process::Process() : node_(stop_node()) {}

Process Process::stop() { return Process(); }

Process Process::input(Name subject, std::vector<Name> params, Process body) {
  for (std::size_t i = 0; i < params.size(); ++i) {
    for (std::size_t j = i + 1; j < params.size(); ++j) {
      if (params[i] == params[j]) {
        throw std::invalid_argument("duplicate input parameter '" +
                                    params[i].str() + "'");
      }
    }
  }
  auto node = std::make_shared<Node>();
  node->size = 1 + body.size();
  node->prefixes = 1 + body.prefix_count();
  node->value = InputNode{std::move(subject), std::move(params), std::move(body)};
  return Process(std::move(node));
}

Process Process::output(Name subject, std::vector<Name> args) {
  auto node = std::make_shared<Node>();
  node->prefixes = 1;
  node->value = OutputNode{std::move(subject), std::move(args)};
  return Process(std::move(node));
}

Process Process::restrict(Name binder, Process body) {
  auto node = std::make_shared<Node>();
  node->size = 1 + body.size();
  node->prefixes = body.prefix_count();
  node->value = NewNode{std::move(binder), std::move(body)};
  return Process(std::move(node));
}

Process Process::par(Process left, Process right) {
  auto node = std::make_shared<Node>();
  node->size = 1 + left.size() + right.size();
  node->prefixes = left.prefix_count() + right.prefix_count();
  node->value = ParNode{std::move(left), std::move(right)};
  return Process(std::move(node));
}

Process Process::par_all(const std::vector<Process>& parts) {
  if (parts.empty()) return stop();
  Process acc = parts.back();
  for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it) {
    acc = par(*it, acc);
  }
  return acc;
}

Tag Process::tag() const { return static_cast<Tag>(node_->value.index()); }

const InputNode& Process::as_input() const {
  return std::get<InputNode>(node_->value);
}
const OutputNode& Process::as_output() const {
  return std::get<OutputNode>(node_->value);
}
const NewNode& Process::as_new() const { return std::get<NewNode>(node_->value); }
const ParNode& Process::as_par() const { return std::get<ParNode>(node_->value); }

std::size_t Process::size() const { return node_->size; }
std::size_t Process::prefix_count() const { return node_->prefixes; }

bool operator==(const Process& a, const Process& b) {
  if (a.node_ == b.node_) return true;
  if (a.tag() != b.tag() || a.size() != b.size()) return false;
  switch (a.tag()) {
    case Tag::kStop:
      return true;
    case Tag::kInput: {
      const auto& x = a.as_input();
      const auto& y = b.as_input();
      return x.subject == y.subject && x.params == y.params && x.body == y.body;
    }
    case Tag::kOutput: {
      const auto& x = a.as_output();
      const auto& y = b.as_output();
      return x.subject == y.subject && x.args == y.args;
    }
    case Tag::kNew: {
      const auto& x = a.as_new();
      const auto& y = b.as_new();
      return x.binder == y.binder && x.body == y.body;
    }
    case Tag::kPar: {
      const auto& x = a.as_par();
      const auto& y = b.as_par();
      return x.left == y.left && x.right == y.right;
    }
  }
  return false;
}

namespace {

void collect_free_into(const Process& p, std::vector<Name>& bound, NameSet& out) {
  auto add = [&](const Name& n) {
    if (std::find(bound.begin(), bound.end(), n) == bound.end()) out.insert(n);
  };
  switch (p.tag()) {
    case Tag::kStop:
      return;
    case Tag::kOutput: {
      const auto& o = p.as_output();
      add(o.subject);
      for (const auto& a : o.args) add(a);
      return;
    }
    case Tag::kInput: {
      const auto& in = p.as_input();
      add(in.subject);
      bound.insert(bound.end(), in.params.begin(), in.params.end());
      collect_free_into(in.body, bound, out);
      bound.resize(bound.size() - in.params.size());
      return;
    }
    case Tag::kNew: {
      const auto& nw = p.as_new();
      bound.push_back(nw.binder);
      collect_free_into(nw.body, bound, out);
      bound.pop_back();
      return;
    }
    case Tag::kPar:
      collect_free_into(p.as_par().left, bound, out);
      collect_free_into(p.as_par().right, bound, out);
      return;
  }
}

void collect_all(const Process& p, NameSet& out) {
  switch (p.tag()) {
    case Tag::kStop:
      return;
    case Tag::kOutput:
      out.insert(p.as_output().subject);
      out.insert(p.as_output().args.begin(), p.as_output().args.end());
      return;
    case Tag::kInput:
      out.insert(p.as_input().subject);
      out.insert(p.as_input().params.begin(), p.as_input().params.end());
      collect_all(p.as_input().body, out);
      return;
    case Tag::kNew:
      out.insert(p.as_new().binder);
      collect_all(p.as_new().body, out);
      return;
    case Tag::kPar:
      collect_all(p.as_par().left, out);
      collect_all(p.as_par().right, out);
      return;
  }
}

void alpha_key_into(const Process& p, std::vector<const Name*>& env,
                    std::string& out) {
  auto ref = [&](const Name& n) {
    for (std::size_t i = env.size(); i-- > 0;) {
      if (*env[i] == n) {
        out += '#';
        out += std::to_string(env.size() - 1 - i);
        return;
      }
    }
    out += '$';
    out += n.str();
  };
  switch (p.tag()) {
    case Tag::kStop:
      out += '0';
      return;
    case Tag::kOutput: {
      const auto& o = p.as_output();
      out += "O(";
      ref(o.subject);
      for (const auto& a : o.args) {
        out += ',';
        ref(a);
      }
      out += ')';
      return;
    }
    case Tag::kInput: {
      const auto& in = p.as_input();
      out += "I(";
      ref(in.subject);
      out += '/';
      out += std::to_string(in.params.size());
      out += ':';
      for (const auto& y : in.params) env.push_back(&y);
      alpha_key_into(in.body, env, out);
      env.resize(env.size() - in.params.size());
      out += ')';
      return;
    }
    case Tag::kNew: {
      const auto& nw = p.as_new();
      out += "N(";
      env.push_back(&nw.binder);
      alpha_key_into(nw.body, env, out);
      env.pop_back();
      out += ')';
      return;
    }
    case Tag::kPar:
      out += "P(";
      alpha_key_into(p.as_par().left, env, out);
      out += ',';
      alpha_key_into(p.as_par().right, env, out);
      out += ')';
      return;
  }
}

Name apply(const Substitution& s, const Name& n) {
  auto it = s.find(n);
  return it == s.end() ? n : it->second;
}

// Restricts `s` to keys free in `p`, dropping identity entries.
Substitution relevant(const Substitution& s, const Process& p) {
  Substitution out;
  if (s.empty()) return out;
  NameSet fn = free_names(p);
  for (const auto& [from, to] : s) {
    if (from != to && fn.count(from)) out.emplace(from, to);
  }
  return out;
}

Process subst_rec(const Process& p, const Substitution& s);

// Pushes `s` under a binder list, renaming binders that would capture.
std::pair<std::vector<Name>, Process> subst_under(const std::vector<Name>& binders,
                                                  const Process& body,
                                                  const Substitution& s) {
  Substitution inner = s;
  for (const auto& b : binders) inner.erase(b);
  inner = relevant(inner, body);
  if (inner.empty()) return {binders, body};

  NameSet range;
  for (const auto& [from, to] : inner) range.insert(to);

  NameSet avoid = all_names(body);
  for (const auto& [from, to] : inner) {
    avoid.insert(from);
    avoid.insert(to);
  }
  avoid.insert(binders.begin(), binders.end());

  std::vector<Name> renamed = binders;
  Substitution rename;
  for (auto& b : renamed) {
    if (range.count(b)) {
      Name fresh = fresh_name(avoid);
      avoid.insert(fresh);
      rename.emplace(b, fresh);
      b = fresh;
    }
  }
  Process moved = rename.empty() ? body : subst_rec(body, rename);
  return {renamed, subst_rec(moved, inner)};
}

Process subst_rec(const Process& p, const Substitution& s) {
  if (s.empty()) return p;
  switch (p.tag()) {
    case Tag::kStop:
      return p;
    case Tag::kOutput: {
      const auto& o = p.as_output();
      std::vector<Name> args;
      args.reserve(o.args.size());
      for (const auto& a : o.args) args.push_back(apply(s, a));
      return Process::output(apply(s, o.subject), std::move(args));
    }
    case Tag::kInput: {
      const auto& in = p.as_input();
      auto [params, body] = subst_under(in.params, in.body, s);
      return Process::input(apply(s, in.subject), std::move(params),
                            std::move(body));
    }
    case Tag::kNew: {
      const auto& nw = p.as_new();
      auto [binders, body] = subst_under({nw.binder}, nw.body, s);
      return Process::restrict(binders.front(), std::move(body));
    }
    case Tag::kPar:
      return Process::par(subst_rec(p.as_par().left, s),
                          subst_rec(p.as_par().right, s));
  }
  return p;
}

}  // namespace

NameSet free_names(const Process& p) {
  NameSet out;
  std::vector<Name> bound;
  collect_free_into(p, bound, out);
  return out;
}

NameSet all_names(const Process& p) {
  NameSet out;
  collect_all(p, out);
  return out;
}

std::string alpha_key(const Process& p) {
  std::string out;
  std::vector<const Name*> env;
  alpha_key_into(p, env, out);
  return out;
}

bool alpha_eq(const Process& p, const Process& q) {
  return alpha_key(p) == alpha_key(q);
}

Process substitute(const Process& p, const Substitution& subst) {
  return subst_rec(p, relevant(subst, p));
}

Name fresh_name(const NameSet& avoid) {
  for (std::size_t i = 0;; ++i) {
    Name candidate("n" + std::to_string(i));
    if (!avoid.count(candidate)) return candidate;
  }
}

nlohmann::json to_json(const Process& p) {
  using nlohmann::json;
  auto names = [](const std::vector<Name>& ns) {
    json arr = json::array();
    for (const auto& n : ns) arr.push_back(n.str());
    return arr;
  };
  switch (p.tag()) {
    case Tag::kStop:
      return json{{"tag", "stop"}};
    case Tag::kInput:
      return json{{"tag", "input"},
                  {"subject", p.as_input().subject.str()},
                  {"params", names(p.as_input().params)},
                  {"body", to_json(p.as_input().body)}};
    case Tag::kOutput:
      return json{{"tag", "output"},
                  {"subject", p.as_output().subject.str()},
                  {"args", names(p.as_output().args)}};
    case Tag::kNew:
      return json{{"tag", "new"},
                  {"binder", p.as_new().binder.str()},
                  {"body", to_json(p.as_new().body)}};
    case Tag::kPar:
      return json{{"tag", "par"},
                  {"left", to_json(p.as_par().left)},
                  {"right", to_json(p.as_par().right)}};
  }
  return json();
}

Process process_from_json(const nlohmann::json& j) {
  auto names = [](const nlohmann::json& arr) {
    std::vector<Name> out;
    for (const auto& n : arr) out.emplace_back(n.get<std::string>());
    return out;
  };
  const auto tag = j.at("tag").get<std::string>();
  if (tag == "stop") return Process::stop();
  if (tag == "input") {
    return Process::input(Name(j.at("subject").get<std::string>()),
                          names(j.at("params")), process_from_json(j.at("body")));
  }
  if (tag == "output") {
    return Process::output(Name(j.at("subject").get<std::string>()),
                           names(j.at("args")));
  }
  if (tag == "new") {
    return Process::restrict(Name(j.at("binder").get<std::string>()),
                             process_from_json(j.at("body")));
  }
  if (tag == "par") {
    return Process::par(process_from_json(j.at("left")),
                        process_from_json(j.at("right")));
  }
  throw std::invalid_argument("unknown process tag '" + tag + "'");
}

}  // namespace pitwo
