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


// Soundness and completeness of assumption-based proofs, checked against
// the conflict classes of the model oracle.

#ifndef PARALOGIC_TESTS_PROOF_PROPERTIES_HPP_
#define PARALOGIC_TESTS_PROOF_PROPERTIES_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "paralogic/oracle.hpp"
#include "paralogic/tableau.hpp"

namespace paralogic::testing {

struct ProofCheck {
  int soundness_violations = 0;
  int completeness_violations = 0;
  int assumption_sets_checked = 0;
};

/// Every returned assumption set S must make the goal hold in all models
/// without conflicts on S; every S whose conflict-free models all satisfy
/// the goal must include some returned set.
inline ProofCheck check_proof(const KnowledgeBase& kb,
                              const SignedProposition& goal,
                              SubsumptionMode mode, std::uint64_t seed) {
  const ProofResult proof = prove(kb, goal, mode);
  const Signature sig = signature_of(kb, goal.prop);
  const ModelSummary summary = summarize_models(kb, sig, mode, {goal.prop});

  std::vector<AtomicAssertion> pairs;
  for (const auto& a : sig.individuals)
    for (const auto& c : sig.atomic_concepts) pairs.push_back({a, c});
  auto mask_of = [&](const std::set<AtomicAssertion>& s) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (s.count(pairs[i])) m |= std::uint64_t{1} << i;
    return m;
  };
  std::vector<std::pair<std::uint64_t, bool>> classes;
  for (const ConflictClass& c : summary.classes) {
    const std::uint64_t bits =
        goal.label == Label::T ? c.all_true : c.all_false;
    classes.emplace_back(mask_of(c.conflicts), (bits & 1U) != 0);
  }
  auto goal_holds_without = [&](std::uint64_t s) {
    for (const auto& [conflicts, holds] : classes)
      if ((conflicts & s) == 0 && !holds) return false;
    return true;
  };

  ProofCheck out;
  std::vector<std::uint64_t> returned;
  for (const AssumptionSet& s : proof.assumption_sets) {
    returned.push_back(mask_of(s));
    ++out.assumption_sets_checked;
    if (!goal_holds_without(returned.back())) ++out.soundness_violations;
  }

  auto check_subset = [&](std::uint64_t s) {
    if (!goal_holds_without(s)) return;
    for (std::uint64_t r : returned)
      if ((r & ~s) == 0) return;
    ++out.completeness_violations;
  };
  if (pairs.size() <= 9) {
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << pairs.size()); ++s)
      check_subset(s);
  } else {
    std::mt19937_64 rng(seed);
    const std::uint64_t all = (std::uint64_t{1} << pairs.size()) - 1;
    check_subset(0);
    check_subset(all);
    for (int i = 0; i < 512; ++i) check_subset(rng() & all);
  }
  return out;
}

}  // namespace paralogic::testing

#endif  // PARALOGIC_TESTS_PROOF_PROPERTIES_HPP_
