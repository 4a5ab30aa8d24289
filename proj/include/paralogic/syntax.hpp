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

// Abstract syntax of ALC: concepts, propositions (axioms and assertions)
// and knowledge bases, plus the concrete text syntax used by KB files.
//
//   kb        := { statement } ;
//   statement := (axiom | assertion) "." ;
//   axiom     := concept ("<=" | "==") concept ;
//   assertion := IDENT ":" concept | "(" IDENT "," IDENT ")" ":" IDENT ;
//   concept   := "top" | "bot" | IDENT | "~" concept
//              | "(" concept ("&"|"|") concept ")"
//              | "exists" IDENT "." concept | "forall" IDENT "." concept ;
//
// A binary operator may appear unparenthesized at the top level of an
// axiom side or an assertion ("a : C | D"). '#' starts a line comment.

#ifndef PARALOGIC_SYNTAX_HPP_
#define PARALOGIC_SYNTAX_HPP_

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace paralogic {

/// Immutable concept expression. Copies share structure.
class Concept {
 public:
  enum class Kind : unsigned char {
    Atomic,
    Top,
    Bottom,
    Not,
    And,
    Or,
    Exists,
    Forall
  };

  /// Default-constructs `top`.
  Concept();

  static Concept atomic(std::string name);
  static Concept top();
  static Concept bottom();
  static Concept negation(Concept operand);
  static Concept conjunction(Concept lhs, Concept rhs);
  static Concept disjunction(Concept lhs, Concept rhs);
  static Concept exists(std::string role, Concept filler);
  static Concept forall(std::string role, Concept filler);

  Kind kind() const;
  bool is_atomic() const { return kind() == Kind::Atomic; }
  bool is_quantifier_free() const;

  /// Concept name for Atomic, role name for Exists/Forall.
  const std::string& name() const;
  /// Operand of Not, filler of Exists/Forall, left side of And/Or.
  const Concept& lhs() const;
  /// Right side of And/Or.
  const Concept& rhs() const;

  /// Atomic concept names occurring in the expression.
  void collect_atoms(std::set<std::string>& out) const;
  void collect_roles(std::set<std::string>& out) const;

  std::size_t hash() const;

  friend bool operator==(const Concept& a, const Concept& b);
  friend std::strong_ordering operator<=>(const Concept& a, const Concept& b);

 private:
  struct Node;
  explicit Concept(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}
  static Concept make(Kind kind, std::string name, const Concept* lhs,
                      const Concept* rhs);
  std::shared_ptr<const Node> node_;
};

/// An (individual, atomic concept) pair: the assertion `individual : concept`
/// with `concept` atomic. Conflict sets and weak-closure assumptions are
/// sets of these.
struct AtomicAssertion {
  std::string individual;
  std::string concept_name;

  auto operator<=>(const AtomicAssertion&) const = default;
};

class Proposition {
 public:
  enum class Kind : unsigned char {
    Subsumption,
    Equality,
    ConceptAssertion,
    RoleAssertion
  };

  static Proposition subsumption(Concept lhs, Concept rhs);
  static Proposition equality(Concept lhs, Concept rhs);
  static Proposition concept_assertion(std::string individual, Concept c);
  static Proposition concept_assertion(const AtomicAssertion& a);
  static Proposition role_assertion(std::string subject, std::string object,
                                    std::string role);

  Kind kind() const { return kind_; }
  bool is_axiom() const {
    return kind_ == Kind::Subsumption || kind_ == Kind::Equality;
  }
  bool is_assertion() const { return !is_axiom(); }
  /// Concept assertion whose concept is atomic.
  bool is_atomic_assertion() const {
    return kind_ == Kind::ConceptAssertion && lhs_.is_atomic();
  }
  std::optional<AtomicAssertion> as_atomic_assertion() const;

  // Axioms.
  const Concept& lhs() const { return lhs_; }
  const Concept& rhs() const { return rhs_; }
  // Concept assertions: `individual : concept`.
  const std::string& individual() const { return subject_; }
  const Concept& concept_expr() const { return lhs_; }
  // Role assertions: `(subject, object) : role`.
  const std::string& subject() const { return subject_; }
  const std::string& object() const { return object_; }
  const std::string& role() const { return role_; }

  bool is_quantifier_free() const;

  friend bool operator==(const Proposition&, const Proposition&) = default;
  friend std::strong_ordering operator<=>(const Proposition&,
                                          const Proposition&) = default;

 private:
  Proposition() = default;

  Kind kind_ = Kind::ConceptAssertion;
  Concept lhs_;
  Concept rhs_;
  std::string subject_;
  std::string object_;
  std::string role_;
};

/// TBox + ABox with set semantics; statement order is preserved.
class KnowledgeBase {
 public:
  KnowledgeBase() = default;
  KnowledgeBase(std::initializer_list<Proposition> props);

  /// Returns false when `p` is already present.
  bool add(const Proposition& p);
  bool contains(const Proposition& p) const;

  /// Every statement in insertion order.
  const std::vector<Proposition>& propositions() const { return statements_; }
  std::vector<Proposition> tbox() const;
  std::vector<Proposition> abox() const;

  std::size_t size() const { return statements_.size(); }
  bool empty() const { return statements_.empty(); }
  bool is_quantifier_free() const;

  friend bool operator==(const KnowledgeBase&, const KnowledgeBase&) = default;

 private:
  std::vector<Proposition> statements_;
  std::set<Proposition> index_;
};

struct Signature {
  std::set<std::string> atomic_concepts;
  std::set<std::string> roles;
  std::set<std::string> individuals;

  void add(const Concept& c);
  void add(const Proposition& p);
  friend bool operator==(const Signature&, const Signature&) = default;
};

Signature signature_of(const KnowledgeBase& kb);
Signature signature_of(const KnowledgeBase& kb, const Proposition& query);

Concept parse_concept(std::string_view text);
/// A single statement; the terminating '.' is optional.
Proposition parse_proposition(std::string_view text);
KnowledgeBase parse_kb(std::string_view text);

/// Fully parenthesized text that parses back to an identical value.
std::string serialize(const Concept& c);
std::string serialize(const Proposition& p);
/// One statement per line, each terminated by ".".
std::string serialize(const KnowledgeBase& kb);
std::string serialize(const AtomicAssertion& a);

std::ostream& operator<<(std::ostream& os, const Concept& c);
std::ostream& operator<<(std::ostream& os, const Proposition& p);

}  // namespace paralogic

#endif  // PARALOGIC_SYNTAX_HPP_
