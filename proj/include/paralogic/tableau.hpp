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


// Signed semantic tableaux for ALC under the three-valued semantics.
//
// Labels: T (t is in the value), F (f is in the value), Tbar (t is not),
// Fbar (f is not). A branch closes strongly on {T a, Tbar a}, {F a, Fbar a}
// or {Tbar a, Fbar a}. It closes weakly, under the assumption that a is
// not a conflict, when it holds {T a, F a} for an atomic assertion a on a
// named individual.

#ifndef PARALOGIC_TABLEAU_HPP_
#define PARALOGIC_TABLEAU_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "paralogic/semantics.hpp"
#include "paralogic/syntax.hpp"

namespace paralogic {

enum class Label : unsigned char { T, F, TBar, FBar };

/// Tbar for T, Fbar for F and back.
Label complement(Label l);
/// "T", "F", "Tbar", "Fbar".
const char* to_string(Label l);

struct SignedProposition {
  Label label;
  Proposition prop;

  friend bool operator==(const SignedProposition&,
                         const SignedProposition&) = default;
  friend std::strong_ordering operator<=>(const SignedProposition&,
                                          const SignedProposition&) = default;
};

/// "Tbar a : (C | D)".
std::string to_string(const SignedProposition& sp);

/// "No conflict on individual:concept".
using Assumption = AtomicAssertion;
using AssumptionSet = std::set<Assumption>;

enum class ClosureKind : unsigned char { Open, StronglyClosed, WeaklyClosed };
const char* to_string(ClosureKind k);

struct ClosureStatus {
  ClosureKind kind = ClosureKind::Open;
  /// WeaklyClosed: every atomic assertion a on the branch with {T a, F a};
  /// any single one closes the branch.
  AssumptionSet options;
  /// StronglyClosed: the closing formulas (one of them when the branch
  /// closes on Tbar a:top or Fbar a:bot).
  std::vector<SignedProposition> witness;
};

/// Closure of a saturated branch. Weak-closure options are restricted to
/// `named` individuals.
ClosureStatus closure_status(const std::vector<SignedProposition>& branch,
                             const std::set<std::string>& named);

/// A fresh individual that no rule may expand, and why.
struct BlockRecord {
  std::string blocked;
  /// The ancestor whose Gamma includes the blocked one's, or the blocked
  /// predecessor it inherits from.
  std::string blocker;
  bool inherited = false;
  std::vector<std::pair<Label, Concept>> blocked_gamma;
  std::vector<std::pair<Label, Concept>> blocker_gamma;
};

struct TableauNode {
  std::size_t id = 0;
  std::optional<std::size_t> parent;
  /// Rule that produced this node from its parent; "root" for the root.
  std::string rule;
  /// The formula the rule was applied to.
  std::optional<SignedProposition> premise;
  std::vector<SignedProposition> added;
  std::vector<std::size_t> children;
  /// Set on leaves.
  std::optional<ClosureStatus> closure;
  /// Leaves: individuals blocked at saturation.
  std::vector<BlockRecord> blocked;
};

class Tableau {
 public:
  Tableau() = default;

  const std::vector<TableauNode>& nodes() const { return nodes_; }
  const TableauNode& root() const { return nodes_.front(); }
  const TableauNode& node(std::size_t id) const { return nodes_.at(id); }
  std::vector<std::size_t> leaves() const;
  /// Formulas accumulated from the root down to `id`, in order.
  std::vector<SignedProposition> branch(std::size_t id) const;

  SubsumptionMode mode() const { return mode_; }
  const std::set<std::string>& named_individuals() const { return named_; }
  /// Generated names in order of first use.
  const std::vector<std::string>& fresh_individuals() const { return fresh_; }

  bool all_strongly_closed() const;
  bool has_open_leaf() const;

 private:
  friend class TableauBuilder;
  std::vector<TableauNode> nodes_;
  SubsumptionMode mode_ = SubsumptionMode::Material;
  std::set<std::string> named_;
  std::vector<std::string> fresh_;
};

struct TableauLimits {
  std::size_t max_nodes = 100000;
};

/// Expands `root` to saturation. Throws ResourceCapError past the node
/// budget.
Tableau expand(const std::vector<SignedProposition>& root, SubsumptionMode mode,
               const TableauLimits& limits = {});

/// The inclusion-minimal sets that pick at least one element from each
/// family, in canonical order (size, then lexicographic).
std::vector<AssumptionSet> minimal_hitting_sets(
    const std::vector<AssumptionSet>& families);

/// Minimal assumption sets that close every branch: empty when a leaf is
/// open, {{}} when every leaf closes strongly.
std::vector<AssumptionSet> minimal_assumption_sets(const Tableau& t);

enum class ProofKind : unsigned char {
  Proved,
  ProvedUnderAssumptions,
  NotProvable
};
const char* to_string(ProofKind k);

struct ProofResult {
  ProofKind kind = ProofKind::NotProvable;
  std::vector<AssumptionSet> assumption_sets;
  Tableau tableau;
};

/// Tableau for {T s | s in kb} plus `extra`, classified by closure.
ProofResult refute(const KnowledgeBase& kb, const SignedProposition& extra,
                   SubsumptionMode mode, const TableauLimits& limits = {});
/// `goal` must be labelled T or F; refutes its complement.
ProofResult prove(const KnowledgeBase& kb, const SignedProposition& goal,
                  SubsumptionMode mode, const TableauLimits& limits = {});

}  // namespace paralogic

#endif  // PARALOGIC_TABLEAU_HPP_
