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

// Exhaustive model enumeration for quantifier-free knowledge bases.
//
// The domain is one distinct object per named individual, with the free
// sets of top and bottom fixed to empty. Every (individual, concept) pair
// ranges over {t}, {f}, {t,f} and every role pair over present/absent.
// Candidate models are evaluated 243 at a time by compiling the
// propositions into a bit-sliced boolean circuit (see kernels/circuit.hpp).

#ifndef PARALOGIC_ORACLE_HPP_
#define PARALOGIC_ORACLE_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "paralogic/kernels/circuit.hpp"
#include "paralogic/semantics.hpp"
#include "paralogic/syntax.hpp"

namespace paralogic {

struct OracleLimits {
  /// Upper bound on the size of the candidate-model space.
  std::uint64_t max_models = std::uint64_t{1} << 30;
  /// nullptr selects kernels::active_kernel().
  const kernels::Kernel* kernel = nullptr;
};

/// Throws OracleInapplicableError unless the KB and query are quantifier
/// free and mention at least one individual.
void check_oracle_scope(const KnowledgeBase& kb, const Signature& sig);

/// Calls `visit` for every model of `kb` over the signature, in canonical
/// order. Stops early when `visit` returns false.
void for_each_model(const KnowledgeBase& kb, const Signature& sig,
                    SubsumptionMode mode,
                    const std::function<bool(const FiniteInterpretation&)>& visit,
                    const OracleLimits& limits = {});
std::vector<FiniteInterpretation> enumerate_models(
    const KnowledgeBase& kb, const Signature& sig, SubsumptionMode mode,
    const OracleLimits& limits = {});

/// The models of a KB sharing one conflict set. Bit i of `all_true`
/// (`all_false`) says t (f) belongs to probe i in every such model.
struct ConflictClass {
  ConflictSet conflicts;
  std::uint64_t models = 0;
  std::uint64_t all_true = 0;
  std::uint64_t all_false = 0;
};

struct ModelSummary {
  /// Non-empty classes ordered by conflict-set size, then lexicographically.
  std::vector<ConflictClass> classes;
  /// Indices into `classes` of the conflict-minimal ones.
  std::vector<std::size_t> minimal;
  std::uint64_t models = 0;
};

/// Up to 64 probes.
ModelSummary summarize_models(const KnowledgeBase& kb, const Signature& sig,
                              SubsumptionMode mode,
                              const std::vector<Proposition>& probes,
                              const OracleLimits& limits = {});

bool oracle_lp_entails(const KnowledgeBase& kb, const Proposition& query,
                       SubsumptionMode mode, const OracleLimits& limits = {});
bool oracle_lpm_entails(const KnowledgeBase& kb, const Proposition& query,
                        SubsumptionMode mode, const OracleLimits& limits = {});

std::vector<FiniteInterpretation> conflict_minimal_models(
    const KnowledgeBase& kb, const Signature& sig, SubsumptionMode mode,
    const OracleLimits& limits = {});

/// "a:C=T a:D=TF (a,b):R" with sorted pairs, present role pairs last.
std::string canonical_model(const FiniteInterpretation& i, const Signature& sig);

struct OracleReport {
  bool lp = false;
  bool lpm = false;
  std::uint64_t models = 0;
  /// Canonical lines of the conflict-minimal models, sorted.
  std::vector<std::string> minimal_models;
};

OracleReport run_oracle(const KnowledgeBase& kb, const Proposition& query,
                        SubsumptionMode mode, const OracleLimits& limits = {});

}  // namespace paralogic

#endif  // PARALOGIC_ORACLE_HPP_
