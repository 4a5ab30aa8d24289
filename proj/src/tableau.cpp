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


#include "paralogic/tableau.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "paralogic/errors.hpp"

namespace paralogic {

Label complement(Label l) {
  switch (l) {
    case Label::T: return Label::TBar;
    case Label::F: return Label::FBar;
    case Label::TBar: return Label::T;
    case Label::FBar: return Label::F;
  }
  return l;
}

const char* to_string(Label l) {
  switch (l) {
    case Label::T: return "T";
    case Label::F: return "F";
    case Label::TBar: return "Tbar";
    case Label::FBar: return "Fbar";
  }
  return "?";
}

std::string to_string(const SignedProposition& sp) {
  return std::string(to_string(sp.label)) + " " + serialize(sp.prop);
}

const char* to_string(ClosureKind k) {
  switch (k) {
    case ClosureKind::Open: return "open";
    case ClosureKind::StronglyClosed: return "strongly-closed";
    case ClosureKind::WeaklyClosed: return "weakly-closed";
  }
  return "?";
}

const char* to_string(ProofKind k) {
  switch (k) {
    case ProofKind::Proved: return "proved";
    case ProofKind::ProvedUnderAssumptions: return "proved-under-assumptions";
    case ProofKind::NotProvable: return "not-provable";
  }
  return "?";
}

namespace {

using Gamma = std::set<std::pair<Label, Concept>>;

SignedProposition signed_assertion(Label l, const std::string& ind,
                                   const Concept& c) {
  return {l, Proposition::concept_assertion(ind, c)};
}

SignedProposition signed_role(Label l, const std::string& from,
                              const std::string& to, const std::string& role) {
  return {l, Proposition::role_assertion(from, to, role)};
}

bool closing_labels(Label a, Label b) {
  auto is = [&](Label x, Label y) {
    return (a == x && b == y) || (a == y && b == x);
  };
  return is(Label::T, Label::TBar) || is(Label::F, Label::FBar) ||
         is(Label::TBar, Label::FBar);
}

// t belongs to every a:top and f to every a:bot.
bool closes_alone(const SignedProposition& f) {
  if (f.prop.kind() != Proposition::Kind::ConceptAssertion) return false;
  const Concept::Kind k = f.prop.concept_expr().kind();
  return (f.label == Label::TBar && k == Concept::Kind::Top) ||
         (f.label == Label::FBar && k == Concept::Kind::Bottom);
}

constexpr Label kAllLabels[] = {Label::T, Label::F, Label::TBar, Label::FBar};

std::optional<std::vector<SignedProposition>> strong_witness(
    const SignedProposition& f, const std::set<SignedProposition>& present) {
  if (closes_alone(f)) return std::vector<SignedProposition>{f};
  for (Label other : kAllLabels) {
    if (!closing_labels(f.label, other)) continue;
    SignedProposition partner{other, f.prop};
    if (present.count(partner))
      return std::vector<SignedProposition>{std::move(partner), f};
  }
  return std::nullopt;
}

bool has_top_or_bottom(const Concept& c) {
  switch (c.kind()) {
    case Concept::Kind::Top:
    case Concept::Kind::Bottom: return true;
    case Concept::Kind::Atomic: return false;
    case Concept::Kind::And:
    case Concept::Kind::Or:
      return has_top_or_bottom(c.lhs()) || has_top_or_bottom(c.rhs());
    default: return has_top_or_bottom(c.lhs());
  }
}

// Value of a quantifier-free concept at an object where every atom is {f}.
std::pair<bool, bool> all_false_value(const Concept& c) {
  switch (c.kind()) {
    case Concept::Kind::Atomic: return {false, true};
    case Concept::Kind::Not: {
      const auto [p, n] = all_false_value(c.lhs());
      return {n, p};
    }
    case Concept::Kind::And: {
      const auto [p1, n1] = all_false_value(c.lhs());
      const auto [p2, n2] = all_false_value(c.rhs());
      return {p1 && p2, n1 || n2};
    }
    case Concept::Kind::Or: {
      const auto [p1, n1] = all_false_value(c.lhs());
      const auto [p2, n2] = all_false_value(c.rhs());
      return {p1 || p2, n1 && n2};
    }
    default: return {false, true};
  }
}

// Atoms of a subsumption that may be instantiated lazily: those whose
// instance already holds at an individual carrying no information about
// its atoms. nullopt when the axiom must be instantiated everywhere.
std::optional<std::set<std::string>> lazy_atoms(const Proposition& ax,
                                                SubsumptionMode mode) {
  const Concept& c = ax.lhs();
  const Concept& d = ax.rhs();
  if (!c.is_quantifier_free() || !d.is_quantifier_free()) return std::nullopt;
  if (has_top_or_bottom(c) || has_top_or_bottom(d)) return std::nullopt;
  const auto [pc, nc] = all_false_value(c);
  const auto [pd, nd] = all_false_value(d);
  const bool holds = mode == SubsumptionMode::Material
                         ? (nc || pd)
                         : ((!pc || pd) && (!nd || nc));
  if (!holds) return std::nullopt;
  std::set<std::string> atoms;
  c.collect_atoms(atoms);
  d.collect_atoms(atoms);
  return atoms;
}

struct BranchState {
  std::vector<SignedProposition> formulas;
  std::set<SignedProposition> present;
  std::set<std::tuple<std::size_t, int, std::string>> fired;
  std::vector<std::string> individuals;
  std::set<std::string> known;
  std::set<std::string> fresh;
  std::map<std::string, Gamma> gamma;
  // T-labelled role assertions: (from, to, role).
  std::vector<std::tuple<std::string, std::string, std::string>> edges;
  std::size_t next_fresh = 1;
  std::optional<std::vector<SignedProposition>> strong;

  bool has(const SignedProposition& f) const { return present.count(f) > 0; }

  void note(const std::string& ind) {
    if (known.insert(ind).second) individuals.push_back(ind);
  }

  void add(const SignedProposition& f) {
    if (!present.insert(f).second) return;
    formulas.push_back(f);
    const Proposition& p = f.prop;
    if (p.kind() == Proposition::Kind::ConceptAssertion) {
      note(p.individual());
      gamma[p.individual()].insert({f.label, p.concept_expr()});
    } else if (p.kind() == Proposition::Kind::RoleAssertion) {
      note(p.subject());
      note(p.object());
      if (f.label == Label::T) edges.emplace_back(p.subject(), p.object(), p.role());
    }
    if (!strong) strong = strong_witness(f, present);
  }

  std::string fresh_name() const {
    for (std::size_t n = next_fresh;; ++n) {
      std::string name = "_x" + std::to_string(n);
      if (!known.count(name)) return name;
    }
  }
};

using Alternatives = std::vector<std::vector<SignedProposition>>;

struct Application {
  const char* rule;
  std::size_t premise;
  int variant;
  std::string target;
  bool generates = false;
  // For generators the alternatives are built once the fresh name is known.
  Alternatives alternatives;
};

bool fully_present(const BranchState& s, const std::vector<SignedProposition>& alt) {
  return std::all_of(alt.begin(), alt.end(),
                     [&](const SignedProposition& f) { return s.has(f); });
}

bool any_present(const BranchState& s, const Alternatives& alts) {
  return std::any_of(alts.begin(), alts.end(),
                     [&](const auto& alt) { return fully_present(s, alt); });
}

Label flip_negation(Label l) {
  switch (l) {
    case Label::T: return Label::F;
    case Label::F: return Label::T;
    case Label::TBar: return Label::FBar;
    case Label::FBar: return Label::TBar;
  }
  return l;
}

std::map<std::string, BlockRecord> compute_blocked(const BranchState& s) {
  if (s.fresh.empty()) return {};
  std::map<std::string, std::vector<std::string>> preds;
  for (const auto& [from, to, role] : s.edges) {
    auto& v = preds[to];
    if (std::find(v.begin(), v.end(), from) == v.end()) v.push_back(from);
  }
  auto gamma_of = [&](const std::string& ind) -> const Gamma& {
    static const Gamma empty;
    auto it = s.gamma.find(ind);
    return it == s.gamma.end() ? empty : it->second;
  };
  auto listed = [](const Gamma& g) {
    return std::vector<std::pair<Label, Concept>>(g.begin(), g.end());
  };

  std::map<std::string, BlockRecord> blocked;
  for (const std::string& y : s.individuals) {
    if (!s.fresh.count(y)) continue;
    const Gamma& gy = gamma_of(y);
    std::vector<std::string> ancestors;
    std::set<std::string> seen{y};
    for (std::vector<std::string> frontier{y}; !frontier.empty();) {
      std::vector<std::string> next;
      for (const std::string& n : frontier) {
        auto it = preds.find(n);
        if (it == preds.end()) continue;
        for (const std::string& p : it->second) {
          if (!seen.insert(p).second) continue;
          ancestors.push_back(p);
          next.push_back(p);
        }
      }
      frontier = std::move(next);
    }
    for (const std::string& x : ancestors) {
      const Gamma& gx = gamma_of(x);
      if (std::includes(gx.begin(), gx.end(), gy.begin(), gy.end())) {
        blocked[y] = BlockRecord{y, x, false, listed(gy), listed(gx)};
        break;
      }
    }
    if (blocked.count(y)) continue;
    if (auto it = preds.find(y); it != preds.end()) {
      for (const std::string& x : it->second) {
        if (blocked.count(x)) {
          blocked[y] = BlockRecord{y, x, true, listed(gy), listed(gamma_of(x))};
          break;
        }
      }
    }
  }
  return blocked;
}

class RuleFinder {
 public:
  RuleFinder(const BranchState& s, const std::map<std::string, BlockRecord>& blocked,
             SubsumptionMode mode,
             std::map<Proposition, std::optional<std::set<std::string>>>& lazy_cache)
      : s_(s), blocked_(blocked), mode_(mode), lazy_cache_(lazy_cache) {}

  std::optional<Application> next() {
    for (int klass = 0; klass < 3; ++klass) {
      for (std::size_t i = 0; i < s_.formulas.size(); ++i) {
        if (auto app = candidate(i, klass)) return app;
      }
    }
    return std::nullopt;
  }

 private:
  bool is_blocked(const std::string& ind) const { return blocked_.count(ind) > 0; }

  bool fired(std::size_t i, int variant, const std::string& target) const {
    return s_.fired.count({i, variant, target}) > 0;
  }

  std::optional<Application> simple(const char* rule, std::size_t i, int klass,
                                    int want_klass, Alternatives alts,
                                    const std::string& target = {}) const {
    if (klass != want_klass || fired(i, 0, target) || any_present(s_, alts))
      return std::nullopt;
    return Application{rule, i, 0, target, false, std::move(alts)};
  }

  std::optional<Application> candidate(std::size_t i, int klass) {
    const SignedProposition& f = s_.formulas[i];
    const Proposition& p = f.prop;
    switch (p.kind()) {
      case Proposition::Kind::ConceptAssertion:
        if (is_blocked(p.individual())) return std::nullopt;
        return concept_rule(i, klass);
      case Proposition::Kind::RoleAssertion:
        if (f.label == Label::F)
          return simple("F-role", i, klass, 0, {{{Label::TBar, p}}});
        if (f.label == Label::FBar)
          return simple("Fbar-role", i, klass, 0, {{{Label::T, p}}});
        return std::nullopt;
      case Proposition::Kind::Subsumption:
        return subsumption_rule(i, klass);
      case Proposition::Kind::Equality: {
        const Proposition fwd = Proposition::subsumption(p.lhs(), p.rhs());
        const Proposition bwd = Proposition::subsumption(p.rhs(), p.lhs());
        switch (f.label) {
          case Label::T:
            return simple("T-equality", i, klass, 0,
                          {{{Label::T, fwd}, {Label::T, bwd}}});
          case Label::TBar:
            return simple("Tbar-equality", i, klass, 1,
                          {{{Label::TBar, fwd}}, {{Label::TBar, bwd}}});
          case Label::F:
            return simple("F-axiom", i, klass, 0, {{{Label::TBar, p}}});
          case Label::FBar:
            return simple("Fbar-axiom", i, klass, 0, {{{Label::T, p}}});
        }
      }
    }
    return std::nullopt;
  }

  std::optional<Application> concept_rule(std::size_t i, int klass) {
    const SignedProposition& f = s_.formulas[i];
    const std::string& a = f.prop.individual();
    const Concept& c = f.prop.concept_expr();
    const Label l = f.label;
    auto at = [&](Label lab, const Concept& x) { return signed_assertion(lab, a, x); };
    switch (c.kind()) {
      case Concept::Kind::Atomic:
      case Concept::Kind::Top:
      case Concept::Kind::Bottom:
        return std::nullopt;
      case Concept::Kind::Not: {
        static const char* names[] = {"T-not", "F-not", "Tbar-not", "Fbar-not"};
        return simple(names[static_cast<int>(l)], i, klass, 0,
                      {{at(flip_negation(l), c.lhs())}});
      }
      case Concept::Kind::And:
      case Concept::Kind::Or: {
        const bool conj = c.kind() == Concept::Kind::And;
        // T over a conjunction and Tbar over a disjunction keep both parts
        // on one branch, and dually for F and Fbar.
        const bool linear = conj ? (l == Label::T || l == Label::FBar)
                                 : (l == Label::TBar || l == Label::F);
        static const char* and_names[] = {"T-and", "F-and", "Tbar-and", "Fbar-and"};
        static const char* or_names[] = {"T-or", "F-or", "Tbar-or", "Fbar-or"};
        const char* name = (conj ? and_names : or_names)[static_cast<int>(l)];
        if (linear)
          return simple(name, i, klass, 0, {{at(l, c.lhs()), at(l, c.rhs())}});
        return simple(name, i, klass, 1, {{at(l, c.lhs())}, {at(l, c.rhs())}});
      }
      case Concept::Kind::Exists:
      case Concept::Kind::Forall: {
        const bool ex = c.kind() == Concept::Kind::Exists;
        const bool generator = ex ? (l == Label::T || l == Label::FBar)
                                  : (l == Label::TBar || l == Label::F);
        static const char* ex_names[] = {"T-exists", "F-exists", "Tbar-exists",
                                         "Fbar-exists"};
        static const char* all_names[] = {"T-forall", "F-forall", "Tbar-forall",
                                          "Fbar-forall"};
        const char* name = (ex ? ex_names : all_names)[static_cast<int>(l)];
        const std::string& role = c.name();
        if (generator) {
          if (klass != 2 || fired(i, 0, a)) return std::nullopt;
          for (const auto& [from, to, r] : s_.edges) {
            if (from == a && r == role && s_.has(signed_assertion(l, to, c.lhs())))
              return std::nullopt;
          }
          return Application{name, i, 0, a, true, {}};
        }
        if (klass != 0) return std::nullopt;
        for (const auto& [from, to, r] : s_.edges) {
          if (from != a || r != role || fired(i, 0, to)) continue;
          Alternatives alts{{signed_assertion(l, to, c.lhs())}};
          if (any_present(s_, alts)) continue;
          return Application{name, i, 0, to, false, std::move(alts)};
        }
        return std::nullopt;
      }
    }
    return std::nullopt;
  }

  bool mentions(const std::string& ind, const std::set<std::string>& atoms) const {
    auto it = s_.gamma.find(ind);
    if (it == s_.gamma.end()) return false;
    for (const auto& [label, concept_expr] : it->second) {
      std::set<std::string> found;
      concept_expr.collect_atoms(found);
      for (const auto& x : found)
        if (atoms.count(x)) return true;
    }
    return false;
  }

  std::optional<Application> subsumption_rule(std::size_t i, int klass) {
    const SignedProposition& f = s_.formulas[i];
    const Proposition& p = f.prop;
    switch (f.label) {
      case Label::F:
        return simple("F-axiom", i, klass, 0, {{{Label::TBar, p}}});
      case Label::FBar:
        return simple("Fbar-axiom", i, klass, 0, {{{Label::T, p}}});
      case Label::T: {
        if (klass != 1) return std::nullopt;
        auto cached = lazy_cache_.find(p);
        if (cached == lazy_cache_.end())
          cached = lazy_cache_.emplace(p, lazy_atoms(p, mode_)).first;
        const auto& lazy = cached->second;
        for (const std::string& a : s_.individuals) {
          if (is_blocked(a)) continue;
          if (lazy && !mentions(a, *lazy)) continue;
          const int variants = mode_ == SubsumptionMode::Material ? 1 : 2;
          for (int v = 0; v < variants; ++v) {
            if (fired(i, v, a)) continue;
            Alternatives alts;
            const char* name;
            if (mode_ == SubsumptionMode::Material) {
              name = "T-subsumption";
              alts = {{signed_assertion(Label::F, a, p.lhs())},
                      {signed_assertion(Label::T, a, p.rhs())}};
            } else if (v == 0) {
              name = "T-subsumption-positive";
              alts = {{signed_assertion(Label::TBar, a, p.lhs())},
                      {signed_assertion(Label::T, a, p.rhs())}};
            } else {
              name = "T-subsumption-negative";
              alts = {{signed_assertion(Label::FBar, a, p.rhs())},
                      {signed_assertion(Label::F, a, p.lhs())}};
            }
            if (any_present(s_, alts)) continue;
            return Application{name, i, v, a, false, std::move(alts)};
          }
        }
        return std::nullopt;
      }
      case Label::TBar: {
        if (klass != 2 || fired(i, 0, "")) return std::nullopt;
        for (const std::string& b : s_.individuals) {
          if (any_present(s_, tbar_subsumption(p, b))) return std::nullopt;
        }
        return Application{"Tbar-subsumption", i, 0, "", true, {}};
      }
    }
    return std::nullopt;
  }

 public:
  Alternatives tbar_subsumption(const Proposition& p, const std::string& x) const {
    if (mode_ == SubsumptionMode::Material) {
      return {{signed_assertion(Label::T, x, p.lhs()),
               signed_assertion(Label::FBar, x, p.lhs()),
               signed_assertion(Label::F, x, p.rhs()),
               signed_assertion(Label::TBar, x, p.rhs())}};
    }
    return {{signed_assertion(Label::T, x, p.lhs()),
             signed_assertion(Label::TBar, x, p.rhs())},
            {signed_assertion(Label::F, x, p.rhs()),
             signed_assertion(Label::FBar, x, p.lhs())}};
  }

 private:
  const BranchState& s_;
  const std::map<std::string, BlockRecord>& blocked_;
  SubsumptionMode mode_;
  std::map<Proposition, std::optional<std::set<std::string>>>& lazy_cache_;
};

// Conclusions of a generator rule for the fresh individual `x`.
Alternatives generated(const RuleFinder& finder, const SignedProposition& f,
                       const std::string& x) {
  const Proposition& p = f.prop;
  if (p.kind() != Proposition::Kind::ConceptAssertion)
    return finder.tbar_subsumption(p, x);
  const Concept& c = p.concept_expr();
  return {{signed_role(Label::T, p.individual(), x, c.name()),
           signed_assertion(f.label, x, c.lhs())}};
}

}  // namespace

class TableauBuilder {
 public:
  static Tableau build(const std::vector<SignedProposition>& root,
                       SubsumptionMode mode, const TableauLimits& limits) {
    TableauBuilder b(mode, limits);
    return b.run(root);
  }

 private:
  TableauBuilder(SubsumptionMode mode, const TableauLimits& limits)
      : limits_(limits) {
    t_.mode_ = mode;
  }

  std::size_t new_node(std::optional<std::size_t> parent, std::string rule,
                       std::optional<SignedProposition> premise,
                       std::vector<SignedProposition> added) {
    if (t_.nodes_.size() >= limits_.max_nodes)
      throw ResourceCapError("tableau exceeded the budget of " +
                             std::to_string(limits_.max_nodes) + " nodes");
    TableauNode n;
    n.id = t_.nodes_.size();
    n.parent = parent;
    n.rule = std::move(rule);
    n.premise = std::move(premise);
    n.added = std::move(added);
    if (parent) t_.nodes_[*parent].children.push_back(n.id);
    t_.nodes_.push_back(std::move(n));
    return t_.nodes_.back().id;
  }

  Tableau run(const std::vector<SignedProposition>& root) {
    BranchState s0;
    for (const auto& f : root) s0.add(f);
    t_.named_ = s0.known;
    new_node(std::nullopt, "root", std::nullopt, s0.formulas);

    std::vector<std::pair<std::size_t, BranchState>> stack;
    stack.emplace_back(0, std::move(s0));
    while (!stack.empty()) {
      auto [id, s] = std::move(stack.back());
      stack.pop_back();
      saturate(id, std::move(s), stack);
    }
    return std::move(t_);
  }

  void saturate(std::size_t id, BranchState s,
                std::vector<std::pair<std::size_t, BranchState>>& stack) {
    while (true) {
      if (s.strong) {
        ClosureStatus cs;
        cs.kind = ClosureKind::StronglyClosed;
        cs.witness = *s.strong;
        t_.nodes_[id].closure = std::move(cs);
        return;
      }
      const auto blocked = compute_blocked(s);
      RuleFinder finder(s, blocked, t_.mode_, lazy_cache_);
      std::optional<Application> app = finder.next();
      if (!app) {
        TableauNode& leaf = t_.nodes_[id];
        leaf.closure = closure_status(s.formulas, t_.named_);
        for (const auto& [name, rec] : blocked) leaf.blocked.push_back(rec);
        return;
      }
      const SignedProposition premise = s.formulas[app->premise];
      s.fired.insert({app->premise, app->variant, app->target});
      if (app->generates) {
        const std::string x = s.fresh_name();
        s.next_fresh = std::stoul(x.substr(2)) + 1;
        s.fresh.insert(x);
        if (std::find(t_.fresh_.begin(), t_.fresh_.end(), x) == t_.fresh_.end())
          t_.fresh_.push_back(x);
        app->alternatives = generated(finder, premise, x);
      }

      auto novel = [&](const BranchState& st, const std::vector<SignedProposition>& alt) {
        std::vector<SignedProposition> out;
        for (const auto& f : alt)
          if (!st.has(f) && std::find(out.begin(), out.end(), f) == out.end())
            out.push_back(f);
        return out;
      };

      if (app->alternatives.size() == 1) {
        const auto added = novel(s, app->alternatives[0]);
        id = new_node(id, app->rule, premise, added);
        for (const auto& f : added) s.add(f);
        continue;
      }
      std::vector<std::pair<std::size_t, BranchState>> children;
      for (const auto& alt : app->alternatives) {
        BranchState child = s;
        const auto added = novel(child, alt);
        const std::size_t cid = new_node(id, app->rule, premise, added);
        for (const auto& f : added) child.add(f);
        children.emplace_back(cid, std::move(child));
      }
      for (auto it = children.rbegin(); it != children.rend(); ++it)
        stack.push_back(std::move(*it));
      return;
    }
  }

  Tableau t_;
  TableauLimits limits_;
  std::map<Proposition, std::optional<std::set<std::string>>> lazy_cache_;
};

std::vector<std::size_t> Tableau::leaves() const {
  std::vector<std::size_t> out;
  for (const auto& n : nodes_)
    if (n.children.empty()) out.push_back(n.id);
  return out;
}

std::vector<SignedProposition> Tableau::branch(std::size_t id) const {
  std::vector<std::size_t> path;
  for (std::optional<std::size_t> cur = id; cur; cur = nodes_.at(*cur).parent)
    path.push_back(*cur);
  std::vector<SignedProposition> out;
  for (auto it = path.rbegin(); it != path.rend(); ++it)
    for (const auto& f : nodes_[*it].added) out.push_back(f);
  return out;
}

bool Tableau::all_strongly_closed() const {
  for (std::size_t leaf : leaves())
    if (nodes_[leaf].closure->kind != ClosureKind::StronglyClosed) return false;
  return true;
}

bool Tableau::has_open_leaf() const {
  for (std::size_t leaf : leaves())
    if (nodes_[leaf].closure->kind == ClosureKind::Open) return true;
  return false;
}

ClosureStatus closure_status(const std::vector<SignedProposition>& branch,
                             const std::set<std::string>& named) {
  const std::set<SignedProposition> present(branch.begin(), branch.end());
  ClosureStatus out;
  for (const auto& f : branch) {
    if (auto w = strong_witness(f, present)) {
      out.kind = ClosureKind::StronglyClosed;
      out.witness = std::move(*w);
      return out;
    }
  }
  for (const auto& f : branch) {
    if (f.label != Label::T || !f.prop.is_atomic_assertion()) continue;
    if (!named.count(f.prop.individual())) continue;
    if (present.count({Label::F, f.prop}))
      out.options.insert(*f.prop.as_atomic_assertion());
  }
  out.kind = out.options.empty() ? ClosureKind::Open : ClosureKind::WeaklyClosed;
  return out;
}

Tableau expand(const std::vector<SignedProposition>& root, SubsumptionMode mode,
               const TableauLimits& limits) {
  return TableauBuilder::build(root, mode, limits);
}

namespace {

bool canonical_less(const AssumptionSet& a, const AssumptionSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

void keep_minimal(std::vector<AssumptionSet>& sets) {
  std::sort(sets.begin(), sets.end(), canonical_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<AssumptionSet> out;
  for (auto& s : sets) {
    const bool dominated = std::any_of(out.begin(), out.end(), [&](const auto& m) {
      return std::includes(s.begin(), s.end(), m.begin(), m.end());
    });
    if (!dominated) out.push_back(std::move(s));
  }
  sets = std::move(out);
}

}  // namespace

std::vector<AssumptionSet> minimal_hitting_sets(
    const std::vector<AssumptionSet>& families) {
  std::vector<AssumptionSet> current{AssumptionSet{}};
  for (const AssumptionSet& family : families) {
    std::vector<AssumptionSet> next;
    for (const AssumptionSet& h : current) {
      const bool hits = std::any_of(family.begin(), family.end(),
                                    [&](const auto& e) { return h.count(e) > 0; });
      if (hits) {
        next.push_back(h);
        continue;
      }
      for (const Assumption& e : family) {
        AssumptionSet grown = h;
        grown.insert(e);
        next.push_back(std::move(grown));
      }
    }
    keep_minimal(next);
    current = std::move(next);
  }
  return current;
}

std::vector<AssumptionSet> minimal_assumption_sets(const Tableau& t) {
  std::vector<AssumptionSet> families;
  for (std::size_t leaf : t.leaves()) {
    const ClosureStatus& cs = *t.node(leaf).closure;
    if (cs.kind == ClosureKind::Open) return {};
    if (cs.kind == ClosureKind::WeaklyClosed) families.push_back(cs.options);
  }
  return minimal_hitting_sets(families);
}

ProofResult refute(const KnowledgeBase& kb, const SignedProposition& extra,
                   SubsumptionMode mode, const TableauLimits& limits) {
  std::vector<SignedProposition> root;
  for (const Proposition& p : kb.propositions()) root.push_back({Label::T, p});
  root.push_back(extra);
  ProofResult r;
  r.tableau = expand(root, mode, limits);
  r.assumption_sets = minimal_assumption_sets(r.tableau);
  if (r.assumption_sets.empty()) r.kind = ProofKind::NotProvable;
  else if (r.assumption_sets.front().empty()) r.kind = ProofKind::Proved;
  else r.kind = ProofKind::ProvedUnderAssumptions;
  return r;
}

ProofResult prove(const KnowledgeBase& kb, const SignedProposition& goal,
                  SubsumptionMode mode, const TableauLimits& limits) {
  if (goal.label != Label::T && goal.label != Label::F)
    throw std::invalid_argument("proof goals are labelled T or F");
  return refute(kb, {complement(goal.label), goal.prop}, mode, limits);
}

}  // namespace paralogic
