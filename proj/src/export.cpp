// Copyright 2026 The Paralogic Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "paralogic/export.hpp"

#include <sstream>

namespace paralogic {

using json = nlohmann::ordered_json;

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string gamma_entry(const std::pair<Label, Concept>& e) {
  return std::string(to_string(e.first)) + " " + serialize(e.second);
}

json gamma_json(const std::vector<std::pair<Label, Concept>>& gamma) {
  json out = json::array();
  for (const auto& e : gamma) out.push_back(gamma_entry(e));
  return out;
}

json assumption_sets_json(const std::vector<AssumptionSet>& sets) {
  json out = json::array();
  for (const AssumptionSet& s : sets) {
    json one = json::array();
    for (const Assumption& a : s) one.push_back(serialize(a));
    out.push_back(std::move(one));
  }
  return out;
}

json closure_json(const ClosureStatus& c) {
  json out{{"status", to_string(c.kind)}};
  if (c.kind == ClosureKind::WeaklyClosed) {
    json options = json::array();
    for (const Assumption& a : c.options) options.push_back(serialize(a));
    out["assumptions"] = std::move(options);
  }
  if (c.kind == ClosureKind::StronglyClosed) {
    json witness = json::array();
    for (const auto& f : c.witness) witness.push_back(to_string(f));
    out["witness"] = std::move(witness);
  }
  return out;
}

json block_json(const BlockRecord& b) {
  return {{"individual", b.blocked},
          {"blocker", b.blocker},
          {"inherited", b.inherited},
          {"gamma", gamma_json(b.blocked_gamma)},
          {"blocker_gamma", gamma_json(b.blocker_gamma)}};
}

json tableau_summary(const ProofResult& proof) {
  const Tableau& t = proof.tableau;
  std::size_t strong = 0, weak = 0, open = 0;
  const auto leaves = t.leaves();
  for (std::size_t leaf : leaves) {
    switch (t.node(leaf).closure->kind) {
      case ClosureKind::StronglyClosed: ++strong; break;
      case ClosureKind::WeaklyClosed: ++weak; break;
      case ClosureKind::Open: ++open; break;
    }
  }
  return {{"proof", to_string(proof.kind)},
          {"nodes", t.nodes().size()},
          {"leaves", leaves.size()},
          {"strongly_closed", strong},
          {"weakly_closed", weak},
          {"open", open},
          {"assumption_sets", assumption_sets_json(proof.assumption_sets)}};
}

json conclusion_json(const Conclusion& c) {
  if (const auto* s = std::get_if<SignedProposition>(&c))
    return {{"kind", "supports"},
            {"label", to_string(s->label)},
            {"proposition", serialize(s->prop)}};
  return {{"kind", "conflict"},
          {"assertion", serialize(std::get<Conflict>(c).assertion)}};
}

std::string argument_name(std::size_t i) { return "A" + std::to_string(i); }

std::string set_text(const ArgumentSet& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k)
    out += (k ? ", " : "") + argument_name(s[k]);
  return out + "}";
}

}  // namespace

json tableau_json(const Tableau& t) {
  json nodes = json::array();
  for (const TableauNode& n : t.nodes()) {
    json added = json::array();
    for (const auto& f : n.added) added.push_back(to_string(f));
    json node{{"id", n.id},
              {"parent", n.parent ? json(*n.parent) : json(nullptr)},
              {"rule", n.rule},
              {"premise", n.premise ? json(to_string(*n.premise)) : json(nullptr)},
              {"added", std::move(added)},
              {"children", n.children}};
    if (n.closure) node["closure"] = closure_json(*n.closure);
    if (!n.blocked.empty()) {
      json blocked = json::array();
      for (const BlockRecord& b : n.blocked) blocked.push_back(block_json(b));
      node["blocked"] = std::move(blocked);
    }
    nodes.push_back(std::move(node));
  }
  return {{"mode", to_string(t.mode())},
          {"named_individuals", t.named_individuals()},
          {"fresh_individuals", t.fresh_individuals()},
          {"nodes", std::move(nodes)},
          {"assumption_sets", assumption_sets_json(minimal_assumption_sets(t))}};
}

std::string tableau_dot(const Tableau& t) {
  std::ostringstream os;
  os << "digraph tableau {\n  node [shape=box, fontname=\"monospace\"];\n";
  for (const TableauNode& n : t.nodes()) {
    std::string label;
    auto line = [&](const std::string& s) { label += dot_escape(s) + "\\l"; };
    for (const auto& f : n.added) line(to_string(f));
    if (n.closure) {
      std::string status = "[" + std::string(to_string(n.closure->kind));
      for (const Assumption& a : n.closure->options) status += " " + serialize(a);
      line(status + "]");
    }
    for (const BlockRecord& b : n.blocked)
      line("blocked " + b.blocked + " by " + b.blocker);
    os << "  n" << n.id << " [label=\"" << label << "\"";
    if (n.closure && n.closure->kind == ClosureKind::Open) os << ", style=bold";
    os << "];\n";
  }
  for (const TableauNode& n : t.nodes())
    for (std::size_t c : n.children)
      os << "  n" << n.id << " -> n" << c << " [label=\"" << dot_escape(t.node(c).rule)
         << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string af_dot(const ArgumentationFramework& af) {
  std::ostringstream os;
  os << "digraph af {\n  rankdir=LR;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < af.size(); ++i)
    os << "  " << argument_name(i) << " [label=\""
       << dot_escape(argument_name(i) + ": " + to_string(af.arguments()[i])) << "\"];\n";
  for (const auto& [a, b] : af.attacks())
    os << "  " << argument_name(a) << " -> " << argument_name(b) << ";\n";
  os << "}\n";
  return os.str();
}

json af_json(const ArgumentationFramework& af) {
  json args = json::array();
  for (std::size_t i = 0; i < af.size(); ++i) {
    const Argument& a = af.arguments()[i];
    json assumptions = json::array();
    for (const Assumption& s : a.assumptions) assumptions.push_back(serialize(s));
    args.push_back({{"id", i},
                    {"name", argument_name(i)},
                    {"assumptions", std::move(assumptions)},
                    {"conclusion", conclusion_json(a.conclusion)},
                    {"text", to_string(a)}});
  }
  json attacks = json::array();
  for (const auto& [a, b] : af.attacks()) attacks.push_back({a, b});
  return {{"arguments", std::move(args)}, {"attacks", std::move(attacks)}};
}

json extensions_json(const std::vector<ArgumentSet>& extensions) {
  json out = json::array();
  for (const ArgumentSet& e : extensions) out.push_back(e);
  return out;
}

json verdict_json(const Verdict& v) {
  json out{{"query", serialize(v.query)},
           {"mode", to_string(v.mode)},
           {"verdict", to_string(v.kind)},
           {"entailed", v.entailed()},
           {"tableau", tableau_summary(v.proof)}};
  if (!v.af) return out;
  out["af"] = af_json(*v.af);
  out["stable_extensions"] = extensions_json(v.stable_extensions);
  if (v.kind == VerdictKind::EntailedConflictMinimal) {
    json witnesses = json::array();
    for (std::size_t e = 0; e < v.witnesses.size(); ++e)
      witnesses.push_back({{"extension", e}, {"argument", v.witnesses[e]}});
    out["witnesses"] = std::move(witnesses);
  } else if (v.counterexample_extension) {
    out["counterexample_extension"] = *v.counterexample_extension;
  }
  return out;
}

Report explain(const Verdict& v) {
  std::ostringstream os;
  const std::string query = serialize(v.query);
  os << "query: " << query << "\nmode: " << to_string(v.mode) << "\n";

  const json summary = tableau_summary(v.proof);
  const auto leaves = summary["leaves"].get<std::size_t>();
  os << "tableau for T " << query << ": " << summary["nodes"].get<std::size_t>()
     << " nodes, " << leaves << (leaves == 1 ? " leaf (" : " leaves (")
     << summary["strongly_closed"].get<std::size_t>() << " strongly closed, "
     << summary["weakly_closed"].get<std::size_t>() << " weakly closed, "
     << summary["open"].get<std::size_t>() << " open)\n";

  if (v.af) {
    const ArgumentationFramework& af = *v.af;
    os << "arguments: " << af.size() << "\n";
    for (std::size_t i = 0; i < af.size(); ++i)
      os << "  " << argument_name(i) << ": " << to_string(af.arguments()[i]) << "\n";
    os << "attacks: " << af.attacks().size() << "\n";
    for (const auto& [a, b] : af.attacks())
      os << "  " << argument_name(a) << " -> " << argument_name(b) << "\n";
    os << "stable extensions: " << v.stable_extensions.size() << "\n";
    const Conclusion goal = SignedProposition{Label::T, v.query};
    for (std::size_t e = 0; e < v.stable_extensions.size(); ++e) {
      const ArgumentSet& ext = v.stable_extensions[e];
      os << "  E" << e << " = " << set_text(ext);
      std::string support;
      for (std::size_t a : ext)
        if (af.arguments()[a].conclusion == goal)
          support += (support.empty() ? "" : ", ") + argument_name(a);
      os << (support.empty() ? "  no support\n" : "  supported by " + support + "\n");
    }
  }

  switch (v.kind) {
    case VerdictKind::EntailedMonotone:
      os << "verdict: " << query << " is entailed\n";
      break;
    case VerdictKind::EntailedConflictMinimal:
      os << "verdict: " << query << " is entailed conflict-minimally\n";
      break;
    case VerdictKind::NotEntailed:
      os << "verdict: " << query << " is not entailed";
      if (v.counterexample_extension)
        os << " (E" << *v.counterexample_extension << " has no argument for it)";
      os << "\n";
      break;
  }
  return {os.str(), verdict_json(v)};
}

Report explain(const KnowledgeBase& kb, const Proposition& query,
               SubsumptionMode mode, const ReasonerLimits& limits) {
  return explain(decide_lpm(kb, query, mode, limits));
}

}  // namespace paralogic
