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


#include <algorithm>

#include "doctest.h"
#include "generators.hpp"
#include "paralogic/errors.hpp"
#include "paralogic/tableau.hpp"
#include "proof_properties.hpp"

using namespace paralogic;
using paralogic::testing::Gen;

namespace {

constexpr auto kInternal = SubsumptionMode::Internal;
constexpr auto kMaterial = SubsumptionMode::Material;

SignedProposition sp(Label l, const char* text) {
  return {l, parse_proposition(text)};
}

const KnowledgeBase& example1() {
  static const KnowledgeBase kb = parse_kb("a : ~C. a : C | D.");
  return kb;
}

bool contains(const std::vector<SignedProposition>& branch,
              const SignedProposition& f) {
  return std::find(branch.begin(), branch.end(), f) != branch.end();
}

AssumptionSet assumptions(std::initializer_list<const char*> pairs) {
  AssumptionSet out;
  for (const char* p : pairs) {
    const std::string s(p);
    const auto colon = s.find(':');
    out.insert({s.substr(0, colon), s.substr(colon + 1)});
  }
  return out;
}

}  // namespace

TEST_CASE("labels and their complements") {
  CHECK(complement(Label::T) == Label::TBar);
  CHECK(complement(Label::F) == Label::FBar);
  CHECK(complement(Label::TBar) == Label::T);
  CHECK(complement(Label::FBar) == Label::F);
  CHECK(to_string(sp(Label::TBar, "a : C | D")) == "Tbar a : (C | D)");
}

TEST_CASE("the first worked tableau") {
  const Tableau t = expand({sp(Label::T, "a : ~C"), sp(Label::T, "a : C | D"),
                            sp(Label::TBar, "a : D")},
                           kMaterial);
  const auto leaves = t.leaves();
  REQUIRE(leaves.size() == 2);
  const auto left = t.branch(leaves[0]);
  const auto right = t.branch(leaves[1]);
  CHECK(contains(left, sp(Label::F, "a : C")));
  CHECK(contains(left, sp(Label::T, "a : C")));
  CHECK(contains(right, sp(Label::T, "a : D")));

  const ClosureStatus& l = *t.node(leaves[0]).closure;
  CHECK(l.kind == ClosureKind::WeaklyClosed);
  CHECK(l.options == assumptions({"a:C"}));
  const ClosureStatus& r = *t.node(leaves[1]).closure;
  CHECK(r.kind == ClosureKind::StronglyClosed);
  CHECK(contains(r.witness, sp(Label::TBar, "a : D")));

  CHECK(minimal_assumption_sets(t) == std::vector<AssumptionSet>{assumptions({"a:C"})});
  CHECK(t.node(leaves[0]).parent == t.node(leaves[1]).parent);
  CHECK(t.node(leaves[0]).rule == "T-or");
}

TEST_CASE("a closing pair in the root closes immediately") {
  const Tableau t = expand({sp(Label::T, "a : C"), sp(Label::TBar, "a : C")}, kMaterial);
  CHECK(t.nodes().size() == 1);
  CHECK(t.root().closure->kind == ClosureKind::StronglyClosed);
  CHECK(minimal_assumption_sets(t) == std::vector<AssumptionSet>{AssumptionSet{}});
}

TEST_CASE("closure_status") {
  const std::set<std::string> named{"a"};
  CHECK(closure_status({sp(Label::TBar, "a : C"), sp(Label::FBar, "a : C")}, named).kind ==
        ClosureKind::StronglyClosed);
  CHECK(closure_status({sp(Label::F, "a : C"), sp(Label::FBar, "a : C")}, named).kind ==
        ClosureKind::StronglyClosed);
  const ClosureStatus weak =
      closure_status({sp(Label::F, "a : C"), sp(Label::T, "a : C")}, named);
  CHECK(weak.kind == ClosureKind::WeaklyClosed);
  CHECK(weak.options == assumptions({"a:C"}));
  CHECK(closure_status({sp(Label::TBar, "a : C"), sp(Label::T, "a : D")}, named).kind ==
        ClosureKind::Open);
  // Conflicts on unnamed individuals close nothing.
  CHECK(closure_status({sp(Label::F, "b : C"), sp(Label::T, "b : C")}, named).kind ==
        ClosureKind::Open);
  // Complex assertions do not close weakly.
  CHECK(closure_status({sp(Label::F, "a : ~C"), sp(Label::T, "a : ~C")}, named).kind ==
        ClosureKind::Open);
  // A strong pair wins over weak options.
  CHECK(closure_status({sp(Label::F, "a : C"), sp(Label::T, "a : C"),
                        sp(Label::TBar, "a : C")},
                       named)
            .kind == ClosureKind::StronglyClosed);
}

TEST_CASE("top and bottom") {
  CHECK(expand({sp(Label::TBar, "a : top")}, kMaterial).all_strongly_closed());
  CHECK(expand({sp(Label::FBar, "a : bot")}, kMaterial).all_strongly_closed());
  for (const char* inert : {"a : top", "a : bot"}) {
    CHECK(expand({sp(Label::T, inert)}, kMaterial).has_open_leaf());
    CHECK(expand({sp(Label::F, inert)}, kMaterial).has_open_leaf());
  }
  // a : ~top yields F a : top, which is satisfiable.
  CHECK(expand({sp(Label::T, "a : ~top")}, kMaterial).has_open_leaf());
}

TEST_CASE("minimal_hitting_sets") {
  CHECK(minimal_hitting_sets({}) == std::vector<AssumptionSet>{AssumptionSet{}});
  CHECK(minimal_hitting_sets({assumptions({"a:C", "a:D"}), assumptions({"a:C"})}) ==
        std::vector<AssumptionSet>{assumptions({"a:C"})});
  CHECK(minimal_hitting_sets({assumptions({"a:C", "a:D"}), assumptions({"a:E", "a:D"})}) ==
        std::vector<AssumptionSet>{assumptions({"a:D"}), assumptions({"a:C", "a:E"})});
}

TEST_CASE("minimal_hitting_sets agrees with brute force") {
  Gen gen(0x4177);
  const std::vector<Assumption> universe{{"a", "A"}, {"a", "B"}, {"a", "C"},
                                         {"b", "A"}, {"b", "B"}, {"b", "C"}};
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<AssumptionSet> families;
    for (int f = gen.uniform(0, 5); f > 0; --f) {
      AssumptionSet fam;
      for (int e = gen.uniform(1, 3); e > 0; --e) fam.insert(gen.pick(universe));
      families.push_back(fam);
    }
    std::vector<AssumptionSet> hitting;
    for (unsigned m = 0; m < 64; ++m) {
      AssumptionSet s;
      for (unsigned i = 0; i < 6; ++i)
        if (m >> i & 1U) s.insert(universe[i]);
      const bool hits = std::all_of(families.begin(), families.end(), [&](const auto& fam) {
        return std::any_of(fam.begin(), fam.end(), [&](const auto& e) { return s.count(e) > 0; });
      });
      if (hits) hitting.push_back(s);
    }
    std::vector<AssumptionSet> expected;
    for (const auto& s : hitting) {
      const bool minimal = std::none_of(hitting.begin(), hitting.end(), [&](const auto& o) {
        return o.size() < s.size() && std::includes(s.begin(), s.end(), o.begin(), o.end());
      });
      if (minimal) expected.push_back(s);
    }
    std::sort(expected.begin(), expected.end(), [](const auto& x, const auto& y) {
      return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    CHECK(minimal_hitting_sets(families) == expected);
  }
}

TEST_CASE("prove on the worked examples") {
  const ProofResult ex1 = prove(example1(), sp(Label::T, "a : D"), kMaterial);
  CHECK(ex1.kind == ProofKind::ProvedUnderAssumptions);
  CHECK(ex1.assumption_sets == std::vector<AssumptionSet>{assumptions({"a:C"})});

  const ProofResult trivial = prove(parse_kb("a : C."), sp(Label::T, "a : C"), kMaterial);
  CHECK(trivial.kind == ProofKind::Proved);
  CHECK(trivial.tableau.nodes().size() == 1);

  const ProofResult open = refute(example1(), sp(Label::TBar, "a : C"), kMaterial);
  CHECK(open.kind == ProofKind::NotProvable);
  CHECK(open.assumption_sets.empty());
  CHECK(open.tableau.has_open_leaf());

  CHECK_THROWS_AS(prove(example1(), sp(Label::TBar, "a : D"), kMaterial),
                  std::invalid_argument);
}

TEST_CASE("material subsumption does not propagate through a conflict") {
  const KnowledgeBase kb = parse_kb("a : C. a : ~C. C <= D.");
  const ProofResult material = prove(kb, sp(Label::T, "a : D"), kMaterial);
  CHECK(material.kind == ProofKind::ProvedUnderAssumptions);
  CHECK(material.assumption_sets == std::vector<AssumptionSet>{assumptions({"a:C"})});
  CHECK(prove(kb, sp(Label::T, "a : D"), kInternal).kind == ProofKind::Proved);
}

TEST_CASE("subsumption and equality queries") {
  for (auto mode : {kMaterial, kInternal}) {
    CHECK(prove(parse_kb("C == D."), sp(Label::T, "D <= C"), mode).kind ==
          ProofKind::Proved);
    CHECK(prove(parse_kb("C <= D."), sp(Label::T, "D <= C"), mode).kind ==
          ProofKind::NotProvable);
  }
  CHECK(prove(parse_kb("C <= D. D <= E."), sp(Label::T, "C <= E"), kInternal).kind ==
        ProofKind::Proved);
  CHECK(prove(parse_kb("C <= D. a : C."), sp(Label::T, "a : D"), kInternal).kind ==
        ProofKind::Proved);
  // A conflicting middle concept breaks material transitivity and modus ponens.
  CHECK(prove(parse_kb("C <= D. D <= E."), sp(Label::T, "C <= E"), kMaterial).kind ==
        ProofKind::NotProvable);
  const ProofResult mp = prove(parse_kb("C <= D. a : C."), sp(Label::T, "a : D"), kMaterial);
  CHECK(mp.kind == ProofKind::ProvedUnderAssumptions);
  CHECK(mp.assumption_sets == std::vector<AssumptionSet>{assumptions({"a:C"})});
  // Axioms are two-valued: F on an axiom means it is not true.
  CHECK(prove(parse_kb("C <= D."), sp(Label::F, "C <= D"), kMaterial).kind ==
        ProofKind::NotProvable);
}

TEST_CASE("role assertions are two-valued") {
  const KnowledgeBase kb = parse_kb("(a, b) : R.");
  CHECK(prove(kb, sp(Label::T, "(a, b) : R"), kMaterial).kind == ProofKind::Proved);
  CHECK(prove(kb, sp(Label::F, "(a, b) : R"), kMaterial).kind == ProofKind::NotProvable);
  CHECK(expand({sp(Label::T, "(a,b):R"), sp(Label::F, "(a,b):R")}, kMaterial)
            .all_strongly_closed());
}

TEST_CASE("quantifier rules") {
  for (auto mode : {kMaterial, kInternal}) {
    // exists R.(C & D) entails exists R.C.
    CHECK(prove(parse_kb("a : exists R.(C & D)."), sp(Label::T, "a : exists R.C"), mode)
              .kind == ProofKind::Proved);
    // forall R.C with an R-successor gives the successor C.
    CHECK(prove(parse_kb("a : forall R.C. (a, b) : R."), sp(Label::T, "b : C"), mode).kind ==
          ProofKind::Proved);
    // Without a successor the universal restriction is vacuous.
    CHECK(prove(parse_kb("a : forall R.C."), sp(Label::T, "a : exists R.C"), mode).kind ==
          ProofKind::NotProvable);
    CHECK(prove(parse_kb("a : exists R.C. a : forall R.D."),
                sp(Label::T, "a : exists R.(C & D)"), mode)
              .kind == ProofKind::Proved);
    // F on a universal restriction needs a fresh successor.
    CHECK(prove(parse_kb("a : ~forall R.C."), sp(Label::T, "a : exists R.~C"), mode).kind ==
          ProofKind::Proved);
  }
}

TEST_CASE("blocking keeps a cyclic terminology finite") {
  for (auto mode : {kMaterial, kInternal}) {
    const ProofResult r =
        prove(parse_kb("a : C. C <= exists R.C."), sp(Label::T, "a : D"), mode);
    CHECK(r.kind == ProofKind::NotProvable);
    const Tableau& t = r.tableau;
    CHECK(t.nodes().size() < 100);
    CHECK_FALSE(t.fresh_individuals().empty());
    bool saw_block = false;
    for (std::size_t leaf : t.leaves()) {
      for (const BlockRecord& b : t.node(leaf).blocked) {
        saw_block = true;
        CHECK(b.blocked.rfind("_x", 0) == 0);
        if (!b.inherited) {
          CHECK(std::includes(b.blocker_gamma.begin(), b.blocker_gamma.end(),
                              b.blocked_gamma.begin(), b.blocked_gamma.end()));
        }
      }
    }
    CHECK(saw_block);
  }
  const Tableau direct = expand({sp(Label::T, "a : exists R.C"),
                                 sp(Label::T, "C <= exists R.C")},
                                kMaterial);
  CHECK(direct.nodes().size() < 100);
}

TEST_CASE("fresh names skip names already in use") {
  const Tableau t = expand({sp(Label::T, "_x1 : exists R.C")}, kMaterial);
  REQUIRE(t.fresh_individuals().size() == 1);
  CHECK(t.fresh_individuals()[0] == "_x2");
}

TEST_CASE("the node budget is enforced") {
  TableauLimits tight;
  tight.max_nodes = 3;
  CHECK_THROWS_AS(prove(parse_kb("a : C | D. a : E | G. a : ~C | ~E."),
                        sp(Label::T, "a : D"), kMaterial, tight),
                  ResourceCapError);
}

TEST_CASE("expansion is deterministic") {
  Gen gen(0xd37);
  for (int trial = 0; trial < 50; ++trial) {
    const auto inst = gen.fragment_instance();
    const auto a = prove(inst.kb, {Label::T, inst.query}, kInternal);
    const auto b = prove(inst.kb, {Label::T, inst.query}, kInternal);
    REQUIRE(a.tableau.nodes().size() == b.tableau.nodes().size());
    for (std::size_t i = 0; i < a.tableau.nodes().size(); ++i) {
      CHECK(a.tableau.node(i).added == b.tableau.node(i).added);
      CHECK(a.tableau.node(i).rule == b.tableau.node(i).rule);
    }
    CHECK(a.assumption_sets == b.assumption_sets);
  }
}

TEST_CASE("leaves with a strong closing pair are never weakly closed") {
  Gen gen(0x5c1);
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = gen.fragment_instance();
    const Tableau t = prove(inst.kb, {Label::T, inst.query}, kMaterial).tableau;
    for (std::size_t leaf : t.leaves()) {
      const auto branch = t.branch(leaf);
      const std::set<SignedProposition> present(branch.begin(), branch.end());
      bool strong = false;
      for (const auto& f : branch)
        if (f.label == Label::T && present.count({Label::TBar, f.prop})) strong = true;
      if (strong) CHECK(t.node(leaf).closure->kind == ClosureKind::StronglyClosed);
    }
  }
}

TEST_CASE("assumption-based proofs are sound and complete against the oracle") {
  Gen gen(0x1e2a);
  int sets = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const auto inst = gen.fragment_instance();
    const Label label = gen.coin() ? Label::T : Label::F;
    const auto mode = gen.coin() ? kMaterial : kInternal;
    CAPTURE(serialize(inst.kb));
    CAPTURE(serialize(inst.query));
    const auto check =
        testing::check_proof(inst.kb, {label, inst.query}, mode, 17u + trial);
    CHECK(check.soundness_violations == 0);
    CHECK(check.completeness_violations == 0);
    sets += check.assumption_sets_checked;
  }
  CHECK(sets > 50);
}

TEST_CASE("expansion terminates on random quantified knowledge bases") {
  Gen gen(0x7e7);
  std::size_t largest = 0, with_fresh = 0, with_blocking = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto mode = gen.coin() ? kMaterial : kInternal;
    const KnowledgeBase kb = gen.quantified_kb(mode == kMaterial);
    const Proposition query = Proposition::concept_assertion("a", gen.concept_expr(2));
    CAPTURE(serialize(kb));
    CAPTURE(serialize(query));
    const ProofResult r = prove(kb, {Label::T, query}, mode);
    largest = std::max(largest, r.tableau.nodes().size());
    with_fresh += !r.tableau.fresh_individuals().empty();
    bool blocking = false;
    for (std::size_t leaf : r.tableau.leaves()) {
      CHECK(r.tableau.node(leaf).closure.has_value());
      blocking |= !r.tableau.node(leaf).blocked.empty();
    }
    with_blocking += blocking;
  }
  CHECK(largest < TableauLimits{}.max_nodes);
  CHECK(with_fresh > 50);
  CHECK(with_blocking > 20);
}
