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

#include "paralogic/semantics.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

#include "paralogic/errors.hpp"

namespace paralogic {

TruthValue truth_value(bool has_t, bool has_f) {
  if (has_t && has_f) return TruthValue::Conflict;
  if (has_t) return TruthValue::True;
  if (has_f) return TruthValue::False;
  throw std::invalid_argument("empty truth set");
}

const char* to_string(TruthValue v) {
  switch (v) {
    case TruthValue::True: return "T";
    case TruthValue::False: return "F";
    case TruthValue::Conflict: return "TF";
  }
  return "?";
}

const char* to_string(SubsumptionMode m) {
  return m == SubsumptionMode::Internal ? "internal" : "material";
}

SubsumptionMode parse_subsumption_mode(const std::string& text) {
  if (text == "internal") return SubsumptionMode::Internal;
  if (text == "material") return SubsumptionMode::Material;
  throw std::invalid_argument("unknown subsumption mode '" + text +
                              "' (expected internal or material)");
}

FiniteInterpretation::FiniteInterpretation(std::size_t domain_size)
    : domain_size_(domain_size) {
  if (domain_size == 0)
    throw std::invalid_argument("interpretation domain must be non-empty");
}

ObjectSet FiniteInterpretation::domain() const {
  ObjectSet d;
  for (Object o = 0; o < domain_size_; ++o) d.insert(d.end(), o);
  return d;
}

void FiniteInterpretation::check_object(Object o) const {
  if (o >= domain_size_)
    throw std::invalid_argument("object " + std::to_string(o) +
                                " outside the domain");
}

void FiniteInterpretation::set_concept(const std::string& name,
                                       ObjectSet positive, ObjectSet negative) {
  for (Object o : positive) check_object(o);
  for (Object o : negative) check_object(o);
  for (Object o = 0; o < domain_size_; ++o) {
    if (!positive.count(o) && !negative.count(o))
      throw std::invalid_argument("concept '" + name + "' leaves object " +
                                  std::to_string(o) + " without a value");
  }
  concepts_[name] = ConceptExtension{std::move(positive), std::move(negative)};
}

void FiniteInterpretation::set_individual(const std::string& name, Object o) {
  check_object(o);
  individuals_[name] = o;
}

void FiniteInterpretation::set_role(const std::string& name,
                                    std::set<ObjectPair> pairs) {
  for (const auto& [a, b] : pairs) {
    check_object(a);
    check_object(b);
  }
  roles_[name] = std::move(pairs);
}

void FiniteInterpretation::add_role_pair(const std::string& name, Object from,
                                         Object to) {
  check_object(from);
  check_object(to);
  roles_[name].insert({from, to});
}

void FiniteInterpretation::set_value(const std::string& individual_name,
                                     const std::string& concept_name,
                                     TruthValue v) {
  const Object o = individual(individual_name);
  auto it = concepts_.find(concept_name);
  if (it == concepts_.end()) {
    ConceptExtension all_false;
    all_false.negative = domain();
    it = concepts_.emplace(concept_name, std::move(all_false)).first;
  }
  if (contains_t(v)) it->second.positive.insert(o);
  else it->second.positive.erase(o);
  if (contains_f(v)) it->second.negative.insert(o);
  else it->second.negative.erase(o);
}

TruthValue FiniteInterpretation::value(const AtomicAssertion& a) const {
  const Object o = individual(a.individual);
  const ConceptExtension& ext = concept_extension(a.concept_name);
  return truth_value(ext.positive.count(o) > 0, ext.negative.count(o) > 0);
}

const ConceptExtension& FiniteInterpretation::concept_extension(
    const std::string& name) const {
  auto it = concepts_.find(name);
  if (it == concepts_.end()) throw UnknownIdentifierError("concept", name);
  return it->second;
}

Object FiniteInterpretation::individual(const std::string& name) const {
  auto it = individuals_.find(name);
  if (it == individuals_.end()) throw UnknownIdentifierError("individual", name);
  return it->second;
}

const std::set<ObjectPair>& FiniteInterpretation::role(
    const std::string& name) const {
  auto it = roles_.find(name);
  if (it == roles_.end()) throw UnknownIdentifierError("role", name);
  return it->second;
}

namespace {

ObjectSet set_union(const ObjectSet& a, const ObjectSet& b) {
  ObjectSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::inserter(out, out.end()));
  return out;
}

ObjectSet set_intersection(const ObjectSet& a, const ObjectSet& b) {
  ObjectSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
  return out;
}

bool subset_of(const ObjectSet& a, const ObjectSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

ConceptExtension eval_concept(const FiniteInterpretation& i, const Concept& c) {
  switch (c.kind()) {
    case Concept::Kind::Atomic:
      return i.concept_extension(c.name());
    case Concept::Kind::Top:
      return {i.domain(), i.top_negatives()};
    case Concept::Kind::Bottom:
      return {i.bottom_positives(), i.domain()};
    case Concept::Kind::Not: {
      ConceptExtension inner = eval_concept(i, c.lhs());
      return {std::move(inner.negative), std::move(inner.positive)};
    }
    case Concept::Kind::And: {
      const ConceptExtension l = eval_concept(i, c.lhs());
      const ConceptExtension r = eval_concept(i, c.rhs());
      return {set_intersection(l.positive, r.positive),
              set_union(l.negative, r.negative)};
    }
    case Concept::Kind::Or: {
      const ConceptExtension l = eval_concept(i, c.lhs());
      const ConceptExtension r = eval_concept(i, c.rhs());
      return {set_union(l.positive, r.positive),
              set_intersection(l.negative, r.negative)};
    }
    case Concept::Kind::Exists:
    case Concept::Kind::Forall: {
      const ConceptExtension filler = eval_concept(i, c.lhs());
      const std::set<ObjectPair>& rel = i.role(c.name());
      ConceptExtension out;
      for (Object x = 0; x < i.domain_size(); ++x) {
        bool some_pos = false, some_neg = false;
        bool all_pos = true, all_neg = true;
        for (auto it = rel.lower_bound({x, 0});
             it != rel.end() && it->first == x; ++it) {
          const Object y = it->second;
          const bool pos = filler.positive.count(y) > 0;
          const bool neg = filler.negative.count(y) > 0;
          some_pos |= pos;
          some_neg |= neg;
          all_pos &= pos;
          all_neg &= neg;
        }
        const bool is_exists = c.kind() == Concept::Kind::Exists;
        if (is_exists ? some_pos : all_pos) out.positive.insert(x);
        if (is_exists ? all_neg : some_neg) out.negative.insert(x);
      }
      return out;
    }
  }
  return {};
}

TruthValue eval_prop(const FiniteInterpretation& i, const Proposition& p,
                     SubsumptionMode mode) {
  switch (p.kind()) {
    case Proposition::Kind::ConceptAssertion: {
      const Object o = i.individual(p.individual());
      const ConceptExtension ext = eval_concept(i, p.concept_expr());
      return truth_value(ext.positive.count(o) > 0,
                         ext.negative.count(o) > 0);
    }
    case Proposition::Kind::RoleAssertion: {
      const Object a = i.individual(p.subject());
      const Object b = i.individual(p.object());
      return i.role(p.role()).count({a, b}) ? TruthValue::True
                                            : TruthValue::False;
    }
    case Proposition::Kind::Subsumption:
    case Proposition::Kind::Equality: {
      const ConceptExtension c = eval_concept(i, p.lhs());
      const ConceptExtension d = eval_concept(i, p.rhs());
      auto material = [&](const ConceptExtension& lo,
                          const ConceptExtension& hi) {
        return subset_of(i.domain(), set_union(lo.negative, hi.positive));
      };
      bool holds = false;
      if (p.kind() == Proposition::Kind::Subsumption) {
        holds = mode == SubsumptionMode::Internal
                    ? subset_of(c.positive, d.positive) &&
                          subset_of(d.negative, c.negative)
                    : material(c, d);
      } else {
        holds = mode == SubsumptionMode::Internal
                    ? c.positive == d.positive && c.negative == d.negative
                    : material(c, d) && material(d, c);
      }
      return holds ? TruthValue::True : TruthValue::False;
    }
  }
  return TruthValue::False;
}

bool satisfies(const FiniteInterpretation& i, const KnowledgeBase& kb,
               SubsumptionMode mode) {
  return std::all_of(kb.propositions().begin(), kb.propositions().end(),
                     [&](const Proposition& p) {
                       return contains_t(eval_prop(i, p, mode));
                     });
}

ConflictSet conflict_set(const FiniteInterpretation& i, const Signature& sig) {
  ConflictSet out;
  for (const auto& a : sig.individuals) {
    for (const auto& c : sig.atomic_concepts) {
      AtomicAssertion pair{a, c};
      if (i.value(pair) == TruthValue::Conflict) out.insert(std::move(pair));
    }
  }
  return out;
}

bool less_conflicts(const FiniteInterpretation& a,
                    const FiniteInterpretation& b, const Signature& sig) {
  const ConflictSet ca = conflict_set(a, sig);
  const ConflictSet cb = conflict_set(b, sig);
  return ca.size() < cb.size() &&
         std::includes(cb.begin(), cb.end(), ca.begin(), ca.end());
}

}  // namespace paralogic
