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


// The decision procedure: LP entailment by strong closure, and
// conflict-minimal entailment by stable extensions of the complete
// argumentation framework for the query. A query is entailed
// conflict-minimally when every stable extension contains an argument
// supporting it.

#ifndef PARALOGIC_ENTAILMENT_HPP_
#define PARALOGIC_ENTAILMENT_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "paralogic/argumentation.hpp"

namespace paralogic {

struct LpDecision {
  bool entailed = false;
  /// The tableau for T query.
  ProofResult proof;
};

/// True iff prove(kb, T query) closes strongly.
LpDecision decide_lp(const KnowledgeBase& kb, const Proposition& query,
                     SubsumptionMode mode, const ReasonerLimits& limits = {});

enum class VerdictKind : unsigned char {
  EntailedMonotone,
  EntailedConflictMinimal,
  NotEntailed
};
/// "entailed-monotone", "entailed-conflict-minimal", "not-entailed".
const char* to_string(VerdictKind k);

struct Verdict {
  VerdictKind kind = VerdictKind::NotEntailed;
  Proposition query = Proposition::concept_assertion("_", Concept::top());
  SubsumptionMode mode = SubsumptionMode::Material;
  ProofResult proof;
  /// Absent for EntailedMonotone.
  std::optional<ArgumentationFramework> af;
  std::vector<ArgumentSet> stable_extensions;
  /// EntailedConflictMinimal: for each stable extension, the index of a
  /// member argument concluding T query.
  std::vector<std::size_t> witnesses;
  /// NotEntailed: index into stable_extensions of an extension with no
  /// argument for the query.
  std::optional<std::size_t> counterexample_extension;

  bool entailed() const { return kind != VerdictKind::NotEntailed; }
};

/// Throws NoStableExtensionError when the framework has no stable
/// extension, ResourceCapError past the limits.
Verdict decide_lpm(const KnowledgeBase& kb, const Proposition& query,
                   SubsumptionMode mode, const ReasonerLimits& limits = {});

}  // namespace paralogic

#endif  // PARALOGIC_ENTAILMENT_HPP_
