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


#include "paralogic/entailment.hpp"

#include <algorithm>

#include "paralogic/errors.hpp"

namespace paralogic {

LpDecision decide_lp(const KnowledgeBase& kb, const Proposition& query,
                     SubsumptionMode mode, const ReasonerLimits& limits) {
  LpDecision out;
  out.proof = prove(kb, {Label::T, query}, mode, limits.tableau());
  out.entailed = out.proof.kind == ProofKind::Proved;
  return out;
}

const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::EntailedMonotone: return "entailed-monotone";
    case VerdictKind::EntailedConflictMinimal: return "entailed-conflict-minimal";
    case VerdictKind::NotEntailed: return "not-entailed";
  }
  return "?";
}

Verdict decide_lpm(const KnowledgeBase& kb, const Proposition& query,
                   SubsumptionMode mode, const ReasonerLimits& limits) {
  Verdict v;
  v.query = query;
  v.mode = mode;
  LpDecision lp = decide_lp(kb, query, mode, limits);
  v.proof = std::move(lp.proof);
  if (lp.entailed) {
    v.kind = VerdictKind::EntailedMonotone;
    return v;
  }

  // Without a supporting argument the framework stays empty and its only
  // stable extension is the empty set.
  v.af = v.proof.kind == ProofKind::NotProvable
             ? ArgumentationFramework{}
             : complete_af(kb, query, mode, limits);
  v.stable_extensions = stable_extensions(*v.af);
  if (v.stable_extensions.empty())
    throw NoStableExtensionError("the argumentation framework for " +
                                 serialize(query) + " has no stable extension");

  const Conclusion goal = SignedProposition{Label::T, query};
  for (std::size_t e = 0; e < v.stable_extensions.size(); ++e) {
    const ArgumentSet& ext = v.stable_extensions[e];
    auto support = std::find_if(ext.begin(), ext.end(), [&](std::size_t a) {
      return v.af->arguments()[a].conclusion == goal;
    });
    if (support == ext.end()) {
      v.kind = VerdictKind::NotEntailed;
      v.witnesses.clear();
      v.counterexample_extension = e;
      return v;
    }
    v.witnesses.push_back(*support);
  }
  v.kind = VerdictKind::EntailedConflictMinimal;
  return v;
}

}  // namespace paralogic
