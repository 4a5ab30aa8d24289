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


// Assumption-based arguments built from weakly closed tableaux, and the
// Dung-style extension semantics over the attack graph they induce.
//
// An argument (S, c) says: if no assumption in S is a conflict, the
// conclusion c holds. Conclusions either support a signed proposition or
// state a conflict C(a:C). An argument concluding C(a:C) attacks every
// argument that assumes ~C(a:C).

#ifndef PARALOGIC_ARGUMENTATION_HPP_
#define PARALOGIC_ARGUMENTATION_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "paralogic/tableau.hpp"

namespace paralogic {

/// The conclusion C(a:C): the assertion is a conflict.
struct Conflict {
  AtomicAssertion assertion;
  auto operator<=>(const Conflict&) const = default;
};

using Conclusion = std::variant<SignedProposition, Conflict>;

struct Argument {
  AssumptionSet assumptions;
  Conclusion conclusion;

  bool concludes_conflict() const {
    return std::holds_alternative<Conflict>(conclusion);
  }
  /// Requires concludes_conflict().
  const AtomicAssertion& conflict() const {
    return std::get<Conflict>(conclusion).assertion;
  }

  friend bool operator==(const Argument&, const Argument&) = default;
  friend std::strong_ordering operator<=>(const Argument&,
                                          const Argument&) = default;
};

/// "~C(a:C)".
std::string to_string(const Assumption& a);
/// "T a:D" or "C(a:C)".
std::string to_string(const Conclusion& c);
/// "({~C(a:D), ~C(a:E)}, C(a:C))".
std::string to_string(const Argument& a);

struct ReasonerLimits {
  std::size_t max_nodes = 100000;
  std::size_t max_arguments = 1000;

  TableauLimits tableau() const { return {max_nodes}; }
};

/// One argument per minimal assumption set of prove(kb, goal).
std::vector<Argument> derive_arguments(const KnowledgeBase& kb,
                                       const SignedProposition& goal,
                                       SubsumptionMode mode,
                                       const ReasonerLimits& limits = {});

/// Arguments concluding C(alpha): closes both kb + {Tbar alpha} and
/// kb + {Fbar alpha}, combining one assumption set from each. Empty when
/// either tableau has an open leaf.
std::vector<Argument> counter_arguments(const KnowledgeBase& kb,
                                        const Assumption& alpha,
                                        SubsumptionMode mode,
                                        const ReasonerLimits& limits = {});

/// For (S, C(a0)) with S = {~C(a1), ..., ~C(ak)}: the k arguments
/// (S - {~C(ai)} + {~C(a0)}, C(ai)). Throws std::invalid_argument on a
/// non-conflict conclusion or an empty assumption set.
std::vector<Argument> rotate(const Argument& a);

/// Indices into ArgumentationFramework::arguments(), ascending.
using ArgumentSet = std::vector<std::size_t>;

class ArgumentationFramework {
 public:
  ArgumentationFramework() = default;
  /// Duplicates collapse onto their first occurrence; attacks are derived.
  explicit ArgumentationFramework(const std::vector<Argument>& arguments);

  const std::vector<Argument>& arguments() const { return arguments_; }
  std::size_t size() const { return arguments_.size(); }
  /// (attacker, target) pairs, sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& attacks() const {
    return attacks_;
  }
  bool attacks(std::size_t attacker, std::size_t target) const;
  const std::vector<std::size_t>& attackers_of(std::size_t target) const {
    return attackers_[target];
  }
  std::optional<std::size_t> find(const Argument& a) const;
  /// Every assumption used by some argument, sorted.
  AssumptionSet assumptions() const;

 private:
  std::vector<Argument> arguments_;
  std::vector<std::pair<std::size_t, std::size_t>> attacks_;
  std::vector<std::vector<std::size_t>> attackers_;
};

/// Seeds with the arguments for T query, then closes under counter-
/// arguments (and their rotations) for every assumption in use. Throws
/// ResourceCapError past limits.max_arguments.
ArgumentationFramework complete_af(const KnowledgeBase& kb,
                                   const Proposition& query,
                                   SubsumptionMode mode,
                                   const ReasonerLimits& limits = {});

bool conflict_free(const ArgumentationFramework& af, const ArgumentSet& s);
/// Every attacker of `a` is attacked by a member of `s`.
bool defends(const ArgumentationFramework& af, const ArgumentSet& s,
             std::size_t a);
bool admissible(const ArgumentationFramework& af, const ArgumentSet& s);
bool is_stable(const ArgumentationFramework& af, const ArgumentSet& s);

// Extension listings are ordered by size, then lexicographically.

/// Exhaustive subset search below 20 arguments, labelling search above.
std::vector<ArgumentSet> stable_extensions(const ArgumentationFramework& af);
/// Backtracking labelling search at any size.
std::vector<ArgumentSet> stable_extensions_by_labelling(
    const ArgumentationFramework& af);
std::vector<ArgumentSet> preferred_extensions(const ArgumentationFramework& af);
ArgumentSet grounded_extension(const ArgumentationFramework& af);

/// Assumptions in the framework whose conflict no member of `e` concludes.
AssumptionSet allowed_assumptions(const ArgumentationFramework& af,
                                  const ArgumentSet& e);

}  // namespace paralogic

#endif  // PARALOGIC_ARGUMENTATION_HPP_
