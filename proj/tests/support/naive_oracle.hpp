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


// Literal model enumeration: every interpretation over the named
// individuals, checked one at a time through `satisfies`. Independent of
// the circuit compiler used by the library oracle.

#ifndef PARALOGIC_TESTS_NAIVE_ORACLE_HPP_
#define PARALOGIC_TESTS_NAIVE_ORACLE_HPP_

#include <algorithm>
#include <functional>
#include <vector>

#include "paralogic/semantics.hpp"

namespace paralogic::testing {

inline void naive_for_each_interpretation(
    const Signature& sig,
    const std::function<void(const FiniteInterpretation&)>& visit) {
  const std::vector<std::string> inds(sig.individuals.begin(),
                                      sig.individuals.end());
  const std::vector<std::string> cons(sig.atomic_concepts.begin(),
                                      sig.atomic_concepts.end());
  const std::vector<std::string> roles(sig.roles.begin(), sig.roles.end());
  const std::size_t n = inds.size();
  std::vector<int> values(n * cons.size(), 0);
  std::vector<int> edges(roles.size() * n * n, 0);
  const TruthValue kValues[] = {TruthValue::True, TruthValue::False,
                                TruthValue::Conflict};
  while (true) {
    FiniteInterpretation i(n);
    for (std::size_t o = 0; o < n; ++o)
      i.set_individual(inds[o], static_cast<Object>(o));
    for (std::size_t o = 0; o < n; ++o)
      for (std::size_t c = 0; c < cons.size(); ++c)
        i.set_value(inds[o], cons[c], kValues[values[o * cons.size() + c]]);
    for (std::size_t r = 0; r < roles.size(); ++r) {
      i.set_role(roles[r], {});
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (edges[r * n * n + x * n + y])
            i.add_role_pair(roles[r], static_cast<Object>(x),
                            static_cast<Object>(y));
    }
    visit(i);
    std::size_t pos = 0;
    for (; pos < values.size(); ++pos) {
      if (++values[pos] < 3) break;
      values[pos] = 0;
    }
    if (pos < values.size()) continue;
    for (pos = 0; pos < edges.size(); ++pos) {
      if (++edges[pos] < 2) break;
      edges[pos] = 0;
    }
    if (pos == edges.size()) return;
  }
}

inline std::vector<FiniteInterpretation> naive_models(const KnowledgeBase& kb,
                                                      const Signature& sig,
                                                      SubsumptionMode mode) {
  std::vector<FiniteInterpretation> out;
  naive_for_each_interpretation(sig, [&](const FiniteInterpretation& i) {
    if (satisfies(i, kb, mode)) out.push_back(i);
  });
  return out;
}

/// Models whose conflict set is ⊆-minimal among all models.
inline std::vector<FiniteInterpretation> naive_minimal_models(
    const std::vector<FiniteInterpretation>& models, const Signature& sig) {
  std::vector<FiniteInterpretation> out;
  for (const auto& m : models) {
    const bool dominated =
        std::any_of(models.begin(), models.end(), [&](const auto& o) {
          return less_conflicts(o, m, sig);
        });
    if (!dominated) out.push_back(m);
  }
  return out;
}

inline bool holds_in_all(const std::vector<FiniteInterpretation>& models,
                         const Proposition& q, SubsumptionMode mode) {
  return std::all_of(models.begin(), models.end(), [&](const auto& m) {
    return contains_t(eval_prop(m, q, mode));
  });
}

inline bool naive_lp(const KnowledgeBase& kb, const Proposition& q,
                     SubsumptionMode mode) {
  return holds_in_all(naive_models(kb, signature_of(kb, q), mode), q, mode);
}

inline bool naive_lpm(const KnowledgeBase& kb, const Proposition& q,
                      SubsumptionMode mode) {
  const Signature sig = signature_of(kb, q);
  return holds_in_all(naive_minimal_models(naive_models(kb, sig, mode), sig), q,
                      mode);
}

}  // namespace paralogic::testing

#endif  // PARALOGIC_TESTS_NAIVE_ORACLE_HPP_
