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

#include "cli.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pitwo/bisim.hpp"
#include "pitwo/error.hpp"
#include "pitwo/harness.hpp"
#include "pitwo/opsem.hpp"
#include "pitwo/rewrite.hpp"
#include "pitwo/translate.hpp"

namespace pitwo {

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct Flags {
  bool json = false;
  bool dot = false;
  bool gc_vacuous = false;
  bool weak = false;
  bool top = false;
  int comm_tokens = 1;
  std::size_t max_states = 10000;
  int jobs = 1;
  int names = 2;
  int max_size = 4;
  int index = 0;
  int context_size = 3;
  std::string lemma = "reduction";
};

std::string load(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw Error("cannot read " + arg.substr(1));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Process term(const std::string& arg) { return parse(load(arg)); }

nlohmann::json names_json(const NameSet& names) {
  auto out = nlohmann::json::array();
  for (const auto& n : names) out.push_back(n.str());
  return out;
}

std::string names_text(const NameSet& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : " ") + n.str();
  return out;
}

std::string summary(const Diagram& d) {
  std::map<std::string, int> counts;
  for (const auto& n : d.nodes()) ++counts[gen_name(n.kind)];
  std::ostringstream os;
  os << "domain:   " << d.domain_object().to_string() << "\n";
  os << "codomain: " << d.codomain_object().to_string() << "\n";
  os << "nodes:    " << d.nodes().size();
  if (!counts.empty()) {
    os << " (";
    bool first = true;
    for (const auto& [k, v] : counts) {
      os << (first ? "" : ", ") << k << " " << v;
      first = false;
    }
    os << ")";
  }
  os << "\n";
  return os.str();
}

void emit_diagram(const Diagram& d, const Flags& f, std::ostream& out) {
  if (f.dot)
    out << to_dot(d);
  else if (f.json)
    out << to_json(d).dump(2) << "\n";
  else
    out << summary(d);
}

std::string subject_text(const TopDiagram& t, Endpoint root, const std::vector<int>& rank) {
  if (root.node == kBoundary) return t.free_names.at(static_cast<std::size_t>(root.port)).str();
  const Node& n = t.diagram.node(root.node);
  if (n.kind == Gen::kNameConst) return n.label;
  return std::string(gen_name(n.kind)) + " n" + std::to_string(rank[static_cast<std::size_t>(root.node)]);
}

// Operational term (among `candidates`) whose top diagram equals `d`.
std::string match(const Diagram& d, const std::vector<Process>& candidates, int catalysts) {
  const auto key = canonical_labeling(d).encoding;
  for (const auto& q : candidates)
    if (canonical_labeling(translate_top(q, catalysts).diagram).encoding == key) return print(q);
  return "";
}

std::vector<Process> reachable_terms(const Process& p, std::size_t max_states) {
  std::vector<Process> out;
  for (const auto& s : reachable(p, max_states).states) out.push_back(s.term);
  return out;
}

int cmd_parse(const std::string& arg, const Flags& f, std::ostream& out) {
  const Process p = term(arg);
  if (f.json)
    out << nlohmann::json{{"term", print(p)}, {"ast", to_json(p)}}.dump(2) << "\n";
  else
    out << print(p) << "\n";
  return kOk;
}

int cmd_fn(const std::string& arg, const Flags& f, std::ostream& out) {
  const auto fn = free_names(term(arg));
  if (f.json)
    out << nlohmann::json{{"free_names", names_json(fn)}}.dump(2) << "\n";
  else
    out << names_text(fn) << "\n";
  return kOk;
}

int cmd_canon(const std::string& arg, const Flags& f, std::ostream& out) {
  const auto c = canonical_form(term(arg), {f.gc_vacuous});
  if (f.json) {
    auto binders = nlohmann::json::array();
    for (const auto& b : c.binders) binders.push_back(b.str());
    out << nlohmann::json{{"term", print(c.term)}, {"key", c.key}, {"binders", binders}}.dump(2)
        << "\n";
  } else {
    out << print(c.term) << "\n";
  }
  return kOk;
}

int cmd_equiv(const std::string& a, const std::string& b, const Flags& f, std::ostream& out) {
  const auto ca = canonical_form(term(a), {f.gc_vacuous});
  const auto cb = canonical_form(term(b), {f.gc_vacuous});
  const bool same = ca.key == cb.key;
  if (f.json)
    out << nlohmann::json{{"congruent", same},
                          {"left", print(ca.term)},
                          {"right", print(cb.term)}}
               .dump(2)
        << "\n";
  else
    out << (same ? "true" : "false") << "\n";
  return same ? kOk : kNegative;
}

int cmd_step(const std::string& arg, const Flags& f, std::ostream& out) {
  const Process p = term(arg);
  const auto c = canonical_form(p);
  const auto redexes = find_redexes(c);
  std::vector<std::string> succ;
  for (const auto& r : redexes) succ.push_back(print(fire(c, r).term));
  if (f.json) {
    auto distinct = nlohmann::json::array();
    for (const auto& q : reduce_step(p)) distinct.push_back(print(q.term));
    auto rs = nlohmann::json::array();
    for (std::size_t i = 0; i < redexes.size(); ++i)
      rs.push_back({{"subject", redexes[i].subject.str()},
                    {"arity", redexes[i].arity},
                    {"sender", print(c.components[redexes[i].sender_index])},
                    {"receiver", print(c.components[redexes[i].receiver_index])},
                    {"successor", succ[i]}});
    out << nlohmann::json{{"successors", succ}, {"distinct", distinct}, {"redexes", rs}}.dump(2)
        << "\n";
  } else {
    for (const auto& s : succ) out << s << "\n";
  }
  return kOk;
}

int cmd_run(const std::string& arg, const Flags& f, std::ostream& out) {
  const auto g = reachable(term(arg), f.max_states);
  if (f.json) {
    out << to_json(g).dump(2) << "\n";
    return kOk;
  }
  out << g.states.size() << " states, " << g.edges.size() << " transitions\n";
  for (std::size_t i = 0; i < g.states.size(); ++i)
    out << "  " << i << (i == g.root ? "*" : "") << ": " << print(g.states[i].term) << "\n";
  for (const auto& [a, b] : g.edges) out << "  " << a << " -> " << b << "\n";
  return kOk;
}

int cmd_barbs(const std::string& arg, const Flags& f, std::ostream& out) {
  const auto b = barbs(term(arg));
  if (f.json)
    out << nlohmann::json{{"barbs", names_json(b)}}.dump(2) << "\n";
  else
    out << names_text(b) << "\n";
  return kOk;
}

int cmd_bisim(const std::string& a, const std::string& b, const Flags& f, std::ostream& out) {
  const auto r = check_bisimilar(term(a), term(b), {f.max_states, f.weak});
  if (f.json) {
    out << nlohmann::json{{"bisimilar", r.bisimilar},
                          {"weak", f.weak},
                          {"certificate", r.certificate}}
               .dump(2)
        << "\n";
  } else {
    out << (r.bisimilar ? "true" : "false") << "\n";
    if (!r.bisimilar) out << r.certificate << "\n";
  }
  return r.bisimilar ? kOk : kNegative;
}

int cmd_translate(const std::string& arg, const Flags& f, std::ostream& out) {
  const Process p = term(arg);
  emit_diagram(f.top ? translate_top(p, f.comm_tokens).diagram : translate(p), f, out);
  return kOk;
}

int cmd_redexes(const std::string& arg, const Flags& f, std::ostream& out) {
  const auto t = translate_top(term(arg), f.comm_tokens);
  const auto rank = canonical_labeling(t.diagram).node_rank;
  auto id = [&](int v) { return rank[static_cast<std::size_t>(v)]; };
  const auto rs = find_diagram_redexes(t);
  if (f.json) {
    auto arr = nlohmann::json::array();
    for (const auto& r : rs)
      arr.push_back({{"output", id(r.output_node)},
                     {"input", id(r.input_node)},
                     {"catalyst", id(r.catalyst)},
                     {"arity", r.arity},
                     {"subject", subject_text(t, r.subject_root, rank)}});
    out << nlohmann::json{{"redexes", arr}}.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < rs.size(); ++i)
      out << i << ": output n" << id(rs[i].output_node) << ", input n" << id(rs[i].input_node)
          << ", catalyst n" << id(rs[i].catalyst) << ", arity " << rs[i].arity << ", subject "
          << subject_text(t, rs[i].subject_root, rank) << "\n";
  }
  return kOk;
}

int cmd_crewrite(const std::string& arg, const Flags& f, std::ostream& out) {
  const Process p = term(arg);
  const auto t = translate_top(p, f.comm_tokens);
  const auto rs = find_diagram_redexes(t);
  if (f.index < 0 || static_cast<std::size_t>(f.index) >= rs.size())
    throw StaleRedex("redex index " + std::to_string(f.index) + " out of range (" +
                     std::to_string(rs.size()) + " redexes)");
  const auto result = apply_comm(t, rs[static_cast<std::size_t>(f.index)]);
  std::vector<Process> succ;
  for (const auto& q : reduce_step(p)) succ.push_back(q.term);
  const auto matched = match(result.diagram, succ, f.comm_tokens);
  if (f.json || f.dot) {
    emit_diagram(result.diagram, f, out);
  } else {
    out << summary(result.diagram);
    out << "matches:  " << (matched.empty() ? "(no operational successor)" : matched) << "\n";
  }
  return kOk;
}

int cmd_concurrent(const std::string& arg, const Flags& f, std::ostream& out) {
  const Process p = term(arg);
  const auto t = translate_top(p, f.comm_tokens);
  const auto steps = concurrent_step(t.diagram, f.comm_tokens);
  const auto states = reachable_terms(p, f.max_states);
  auto arr = nlohmann::json::array();
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto matched = match(steps[i].result, states, f.comm_tokens);
    if (f.json)
      arr.push_back({{"fired", steps[i].redexes.size()}, {"matches", matched}});
    else
      out << "step " << i << ": fires " << steps[i].redexes.size() << " redex"
          << (steps[i].redexes.size() == 1 ? "" : "es") << ", matches "
          << (matched.empty() ? "(none)" : matched) << "\n";
  }
  if (f.json) out << nlohmann::json{{"steps", arr}}.dump(2) << "\n";
  return kOk;
}

int cmd_verify(const Flags& f, bool size_given, std::ostream& out) {
  VerifyOptions options;
  options.jobs = f.jobs;
  options.max_states = std::max<std::size_t>(f.max_states, 100000);
  CorpusSpec spec = f.lemma == "congruence" ? small_spec() : desk_spec();
  spec.name_alphabet_size = f.names;
  if (size_given) spec.max_prefixes = f.max_size;
  VerificationReport r;
  if (f.lemma == "reduction")
    r = verify_reduction_lemma(spec, options);
  else if (f.lemma == "observation")
    r = verify_observation_lemma(spec, options);
  else if (f.lemma == "fullabstraction")
    r = verify_full_abstraction(spec, options);
  else
    r = verify_contextual_congruence(spec, static_cast<std::size_t>(f.context_size), options);
  if (f.json)
    out << to_json(r).dump(2) << "\n";
  else
    out << format_table(r);
  return r.passed() ? kOk : kNegative;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Workbench for the finite pi-calculus and its string-diagram semantics", "pitwo"};
  app.require_subcommand(1);
  Flags f;
  app.add_flag("--json", f.json, "Machine-readable output");
  app.add_flag("--dot", f.dot, "Graphviz output for diagrams");
  app.add_flag("--gc-vacuous", f.gc_vacuous, "Treat (new x)P as P when x is unused");
  app.add_flag("--weak", f.weak, "Weak instead of strong barbed bisimulation");
  app.add_flag("--top", f.top, "translate: add catalysts and name constants");
  app.add_option("--comm-tokens", f.comm_tokens, "COMM catalysts in top diagrams")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-states", f.max_states, "State budget for explorations")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", f.jobs, "Worker threads for verify")->check(CLI::PositiveNumber);
  app.add_option("--names", f.names, "Name alphabet size for verify")->check(CLI::Range(1, 26));
  auto* size_opt = app.add_option("--max-size", f.max_size, "Prefix budget for verify corpora")
                       ->check(CLI::NonNegativeNumber);
  app.add_option("--index", f.index, "Redex to fire with crewrite")->check(CLI::NonNegativeNumber);
  app.add_option("--context-size", f.context_size, "Context size bound for congruence")
      ->check(CLI::PositiveNumber);
  app.add_option("--lemma", f.lemma, "reduction | observation | fullabstraction | congruence")
      ->check(CLI::IsMember({"reduction", "observation", "fullabstraction", "congruence"}));

  std::string a, b;
  auto unary = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("term", a, "Term, or @file")->required();
    s->fallthrough();
    return s;
  };
  auto binary = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("left", a, "Term, or @file")->required();
    s->add_option("right", b, "Term, or @file")->required();
    s->fallthrough();
    return s;
  };
  auto* parse_cmd = unary("parse", "Parse and pretty-print a term");
  auto* fn_cmd = unary("fn", "Free names");
  auto* canon_cmd = unary("canon", "Canonical form under structural congruence");
  auto* equiv_cmd = binary("equiv", "Decide structural congruence");
  auto* step_cmd = unary("step", "One reduct per communication");
  auto* run_cmd = unary("run", "Reachable reduction graph");
  auto* barbs_cmd = unary("barbs", "Observable output channels");
  auto* bisim_cmd = binary("bisim", "Decide barbed bisimilarity");
  auto* translate_cmd = unary("translate", "String diagram of a term");
  auto* redexes_cmd = unary("redexes", "comm redexes of the top diagram");
  auto* crewrite_cmd = unary("crewrite", "Fire one comm redex");
  auto* concurrent_cmd = unary("concurrent", "Maximal concurrent firings");
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive lemma checks");
  verify_cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (parse_cmd->parsed()) return cmd_parse(a, f, out);
    if (fn_cmd->parsed()) return cmd_fn(a, f, out);
    if (canon_cmd->parsed()) return cmd_canon(a, f, out);
    if (equiv_cmd->parsed()) return cmd_equiv(a, b, f, out);
    if (step_cmd->parsed()) return cmd_step(a, f, out);
    if (run_cmd->parsed()) return cmd_run(a, f, out);
    if (barbs_cmd->parsed()) return cmd_barbs(a, f, out);
    if (bisim_cmd->parsed()) return cmd_bisim(a, b, f, out);
    if (translate_cmd->parsed()) return cmd_translate(a, f, out);
    if (redexes_cmd->parsed()) return cmd_redexes(a, f, out);
    if (crewrite_cmd->parsed()) return cmd_crewrite(a, f, out);
    if (concurrent_cmd->parsed()) return cmd_concurrent(a, f, out);
    if (verify_cmd->parsed()) return cmd_verify(f, size_opt->count() > 0, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace pitwo
