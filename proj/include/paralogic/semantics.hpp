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

// Three-valued (LP) model theory over finite domains.
//
// An atomic concept denotes a pair <P, N> of positive and negative
// instances with P u N = O; an object in both is a conflict. Complex
// concepts are evaluated by the extended interpretation function, and a
// proposition receives one of the truth sets {t}, {f} or {t,f}.

#ifndef PARALOGIC_SEMANTICS_HPP_
#define PARALOGIC_SEMANTICS_HPP_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "paralogic/syntax.hpp"

namespace paralogic {

/// The LP truth sets. Never empty.
enum class TruthValue : unsigned char { True, False, Conflict };

constexpr bool contains_t(TruthValue v) { return v != TruthValue::False; }
constexpr bool contains_f(TruthValue v) { return v != TruthValue::True; }
TruthValue truth_value(bool has_t, bool has_f);
/// "T", "F" or "TF".
const char* to_string(TruthValue v);

enum class SubsumptionMode : unsigned char {
  /// t iff P_C is a subset of P_D and N_D is a subset of N_C.
  Internal,
  /// t iff every object is in N_C or in P_D.
  Material,
};

const char* to_string(SubsumptionMode m);
/// Accepts "internal" and "material".
SubsumptionMode parse_subsumption_mode(const std::string& text);

using Object = std::uint32_t;
using ObjectSet = std::set<Object>;
using ObjectPair = std::pair<Object, Object>;

struct ConceptExtension {
  ObjectSet positive;
  ObjectSet negative;
  friend bool operator==(const ConceptExtension&,
                         const ConceptExtension&) = default;
};

class FiniteInterpretation {
 public:
  /// Domain {0, ..., domain_size - 1}; domain_size must be positive.
  explicit FiniteInterpretation(std::size_t domain_size);

  std::size_t domain_size() const { return domain_size_; }
  ObjectSet domain() const;

  /// Throws std::invalid_argument unless positive u negative = domain.
  void set_concept(const std::string& name, ObjectSet positive,
                   ObjectSet negative);
  void set_individual(const std::string& name, Object o);
  void set_role(const std::string& name, std::set<ObjectPair> pairs);
  void add_role_pair(const std::string& name, Object from, Object to);
  /// The free sets X in pi*(top) = <O, X> and pi*(bot) = <X, O>.
  void set_top_negatives(ObjectSet x) { top_negatives_ = std::move(x); }
  void set_bottom_positives(ObjectSet x) { bottom_positives_ = std::move(x); }

  /// Sets the value of `individual : concept` for an already mapped
  /// individual, creating the concept (all-false) if needed.
  void set_value(const std::string& individual, const std::string& concept_name,
                 TruthValue v);
  TruthValue value(const AtomicAssertion& a) const;

  const ConceptExtension& concept_extension(const std::string& name) const;
  Object individual(const std::string& name) const;
  const std::set<ObjectPair>& role(const std::string& name) const;
  const ObjectSet& top_negatives() const { return top_negatives_; }
  const ObjectSet& bottom_positives() const { return bottom_positives_; }

  const std::map<std::string, ConceptExtension>& concepts() const {
    return concepts_;
  }
  const std::map<std::string, Object>& individuals() const {
    return individuals_;
  }
  const std::map<std::string, std::set<ObjectPair>>& roles() const {
    return roles_;
  }

 private:
  void check_object(Object o) const;

  std::size_t domain_size_;
  std::map<std::string, ConceptExtension> concepts_;
  std::map<std::string, Object> individuals_;
  std::map<std::string, std::set<ObjectPair>> roles_;
  ObjectSet top_negatives_;
  ObjectSet bottom_positives_;
};

ConceptExtension eval_concept(const FiniteInterpretation& i, const Concept& c);
TruthValue eval_prop(const FiniteInterpretation& i, const Proposition& p,
                     SubsumptionMode mode);
bool satisfies(const FiniteInterpretation& i, const KnowledgeBase& kb,
               SubsumptionMode mode);

using ConflictSet = std::set<AtomicAssertion>;

/// Named-individual / atomic-concept pairs valued {t,f}.
ConflictSet conflict_set(const FiniteInterpretation& i, const Signature& sig);
/// Strict subset of conflict sets.
bool less_conflicts(const FiniteInterpretation& a,
                    const FiniteInterpretation& b, const Signature& sig);

}  // namespace paralogic

#endif  // PARALOGIC_SEMANTICS_HPP_
