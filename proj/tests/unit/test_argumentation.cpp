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
#include <cmath>

#include "doctest.h"
#include "generators.hpp"
#include "paralogic/argumentation.hpp"
#include "paralogic/errors.hpp"
#include "paralogic/oracle.hpp"

using namespace paralogic;
using paralogic::testing::Gen;

namespace {

constexpr auto kMaterial = SubsumptionMode::Material;
constexpr auto kInternal = SubsumptionMode::Internal;

const KnowledgeBase& example1() {
  static const KnowledgeBase kb = parse_kb("a : ~C. a : C | D.");
  return kb;
}
const KnowledgeBase& example3() {
  static const KnowledgeBase kb = parse_kb("a : ~C. a : C | D. a : ~D | E. a : ~E.");
  return kb;
}
const KnowledgeBase& example4() {
  static const KnowledgeBase kb =
      parse_kb("a : ~C. a : C | D. a : ~D. a : C | E. a : D | E.");
  return kb;
}

Assumption on_a(const char* c) { return {"a", c}; }

Argument supports(std::initializer_list<const char*> assumed, const char* query) {
  Argument a{{}, SignedProposition{Label::T, parse_proposition(query)}};
  for (const char* c : assumed) a.assumptions.insert(on_a(c));
  return a;
}

Argument conflict(std::initializer_list<const char*> assumed, const char* c) {
  Argument a{{}, Conflict{on_a(c)}};
  for (const char* s : assumed) a.assumptions.insert(on_a(s));
  return a;
}

using Edges = std::vector<std::pair<std::size_t, std::size_t>>;

/// Every subset checked straight from the definition.
std::vector<ArgumentSet> brute_force_stable(const ArgumentationFramework& af) {
  std::vector<ArgumentSet> out;
  for (unsigned m = 0; m < (1U << af.size()); ++m) {
    ArgumentSet s;
    for (std::size_t i = 0; i < af.size(); ++i)
      if (m >> i & 1U) s.push_back(i);
    bool ok = true;
    for (std::size_t x = 0; x < af.size() && ok; ++x) {
      const bool in = (m >> x & 1U) != 0;
      bool attacked = false;
      for (std::size_t y : s) attacked |= af.attacks(y, x);
      ok = in ? !attacked : attacked;
    }
    if (ok) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

}  // namespace

TEST_CASE("argument rendering") {
  CHECK(to_string(supports({"C"}, "a : D")) == "({~C(a:C)}, T a:D)");
  CHECK(to_string(conflict({"D", "E"}, "C")) == "({~C(a:D), ~C(a:E)}, C(a:C))");
  CHECK(to_string(Argument{{}, SignedProposition{Label::F, parse_proposition("a : C | D")}}) ==
        "({}, F a:(C | D))");
}

TEST_CASE("derive_arguments") {
  CHECK(derive_arguments(example3(), {Label::T, parse_proposition("a : D")}, kMaterial) ==
        std::vector<Argument>{supports({"C"}, "a : D")});
  CHECK(derive_arguments(parse_kb("a : C."), {Label::T, parse_proposition("a : C")}, kMaterial) ==
        std::vector<Argument>{supports({}, "a : C")});
  CHECK(derive_arguments(example4(), {Label::T, parse_proposition("a : E")}, kMaterial) ==
        std::vector<Argument>{supports({"C"}, "a : E"), supports({"D"}, "a : E")});
  CHECK(derive_arguments(example1(), {Label::T, parse_proposition("a : E")}, kMaterial).empty());
}

TEST_CASE("counter_arguments") {
  CHECK(counter_arguments(example3(), on_a("C"), kMaterial) ==
        std::vector<Argument>{conflict({"D", "E"}, "C")});
  CHECK(counter_arguments(example1(), on_a("C"), kMaterial).empty());
  CHECK(counter_arguments(example4(), on_a("C"), kMaterial) ==
        std::vector<Argument>{conflict({"D"}, "C")});
  // An outright contradiction needs no assumptions.
  CHECK(counter_arguments(parse_kb("a : C. a : ~C."), on_a("C"), kMaterial) ==
        std::vector<Argument>{conflict({}, "C")});
}

TEST_CASE("rotate") {
  CHECK(rotate(conflict({"D", "E"}, "C")) ==
        std::vector<Argument>{conflict({"C", "E"}, "D"), conflict({"C", "D"}, "E")});
  CHECK(rotate(conflict({"D"}, "C")) == std::vector<Argument>{conflict({"C"}, "D")});
  CHECK_THROWS_AS(rotate(supports({"C"}, "a : D")), std::invalid_argument);
  CHECK_THROWS_AS(rotate(conflict({}, "C")), std::invalid_argument);
}

TEST_CASE("single-assumption rotation is an involution") {
  Gen gen(0x707);
  const std::vector<const char*> atoms{"A", "B", "C", "D"};
  for (int i = 0; i < 50; ++i) {
    const char* x = gen.pick(atoms);
    const char* y = gen.pick(atoms);
    if (std::string(x) == y) continue;
    const Argument a = conflict({x}, y);
    const auto once = rotate(a);
    REQUIRE(once.size() == 1);
    CHECK(rotate(once[0]) == std::vector<Argument>{a});
  }
}

TEST_CASE("complete_af for the three-conflict example") {
  const ArgumentationFramework af = complete_af(example3(), parse_proposition("a : D"), kMaterial);
  CHECK(af.arguments() == std::vector<Argument>{supports({"C"}, "a : D"),
                                                conflict({"D", "E"}, "C"),
                                                conflict({"C", "E"}, "D"),
                                                conflict({"C", "D"}, "E")});
  CHECK(af.attacks() == Edges{{1, 0}, {1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}});
  CHECK(af.attacks().size() == 7);
  CHECK(stable_extensions(af) == std::vector<ArgumentSet>{{1}, {0, 2}, {0, 3}});
  CHECK(stable_extensions(af) == brute_force_stable(af));

  CHECK(conflict_free(af, {0, 2}));
  CHECK_FALSE(conflict_free(af, {1, 2}));
  CHECK(defends(af, {2}, 0));
  CHECK_FALSE(defends(af, {}, 0));
  CHECK(conflict_free(af, {}));

  CHECK(allowed_assumptions(af, {1}) == AssumptionSet{on_a("D"), on_a("E")});
  CHECK(allowed_assumptions(af, {}) == af.assumptions());
}

TEST_CASE("complete_af for the two-model example") {
  const ArgumentationFramework af = complete_af(example4(), parse_proposition("a : E"), kMaterial);
  CHECK(af.arguments() == std::vector<Argument>{supports({"C"}, "a : E"),
                                                supports({"D"}, "a : E"),
                                                conflict({"D"}, "C"),
                                                conflict({"C"}, "D")});
  CHECK(af.attacks() == Edges{{2, 0}, {2, 3}, {3, 1}, {3, 2}});
  CHECK(stable_extensions(af) == std::vector<ArgumentSet>{{0, 3}, {1, 2}});
  CHECK(allowed_assumptions(af, {0, 3}) == AssumptionSet{on_a("C")});
  CHECK(preferred_extensions(af) == std::vector<ArgumentSet>{{0, 3}, {1, 2}});
  CHECK(grounded_extension(af).empty());
}

TEST_CASE("frameworks without attacks") {
  const ArgumentationFramework af = complete_af(parse_kb("a : C."), parse_proposition("a : C"), kMaterial);
  REQUIRE(af.size() == 1);
  CHECK(af.attacks().empty());
  CHECK(stable_extensions(af) == std::vector<ArgumentSet>{{0}});
  CHECK(preferred_extensions(af) == std::vector<ArgumentSet>{{0}});
  CHECK(grounded_extension(af) == ArgumentSet{0});

  const ArgumentationFramework empty;
  CHECK(stable_extensions(empty) == std::vector<ArgumentSet>{{}});
  CHECK(grounded_extension(empty).empty());
}

TEST_CASE("odd attack cycles have no stable extension") {
  const ArgumentationFramework af({conflict({"B"}, "A"), conflict({"C"}, "B"),
                                   conflict({"A"}, "C")});
  CHECK(af.attacks() == Edges{{0, 2}, {1, 0}, {2, 1}});
  CHECK(stable_extensions(af).empty());
  CHECK(stable_extensions_by_labelling(af).empty());
  CHECK(preferred_extensions(af) == std::vector<ArgumentSet>{{}});
}

TEST_CASE("duplicates collapse onto the first occurrence") {
  const ArgumentationFramework af({conflict({"D"}, "C"), conflict({"C"}, "D"), conflict({"D"}, "C")});
  CHECK(af.size() == 2);
  CHECK(af.find(conflict({"C"}, "D")) == std::optional<std::size_t>{1});
  CHECK_FALSE(af.find(conflict({"C"}, "E")).has_value());
}

TEST_CASE("the argument budget is enforced") {
  ReasonerLimits tight;
  tight.max_arguments = 3;
  CHECK_THROWS_AS(complete_af(example3(), parse_proposition("a : D"), kMaterial, tight),
                  ResourceCapError);
}

TEST_CASE("extension solvers agree on random frameworks") {
  Gen gen(0xaf);
  const std::vector<const char*> atoms{"A", "B", "C", "D", "E", "G"};
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Argument> args;
    for (int n = gen.uniform(0, 12); n > 0; --n) {
      const char* c = gen.pick(atoms);
      Argument a{{}, Conflict{on_a(c)}};
      for (int k = gen.uniform(0, 2); k > 0; --k) {
        const char* s = gen.pick(atoms);
        if (std::string(s) != c) a.assumptions.insert(on_a(s));
      }
      args.push_back(a);
    }
    const ArgumentationFramework af(args);
    const auto stable = stable_extensions(af);
    CHECK(stable == brute_force_stable(af));
    CHECK(stable == stable_extensions_by_labelling(af));

    const auto preferred = preferred_extensions(af);
    const ArgumentSet grounded = grounded_extension(af);
    CHECK(admissible(af, grounded));
    for (const auto& s : stable) {
      CHECK(is_stable(af, s));
      CHECK(std::find(preferred.begin(), preferred.end(), s) != preferred.end());
    }
    for (const auto& p : preferred) {
      CHECK(admissible(af, p));
      CHECK(std::includes(p.begin(), p.end(), grounded.begin(), grounded.end()));
    }
  }
}

TEST_CASE("labelling search scales past the exhaustive limit") {
  // Twelve disjoint mutual-attack pairs: 24 arguments, 2^12 extensions.
  std::vector<Argument> args;
  for (int i = 0; i < 12; ++i) {
    const std::string x = "X" + std::to_string(i), y = "Y" + std::to_string(i);
    args.push_back({{{"a", y}}, Conflict{{"a", x}}});
    args.push_back({{{"a", x}}, Conflict{{"a", y}}});
  }
  const ArgumentationFramework af(args);
  const auto stable = stable_extensions(af);
  CHECK(stable.size() == 4096);
  for (const auto& s : stable) CHECK(s.size() == 12);
  CHECK(preferred_extensions(af) == stable);
  CHECK(grounded_extension(af).empty());
}

TEST_CASE("frameworks from random knowledge bases") {
  Gen gen(0xc0af);
  for (int trial = 0; trial < 150; ++trial) {
    const auto inst = gen.fragment_instance();
    const auto mode = gen.coin() ? kMaterial : kInternal;
    CAPTURE(serialize(inst.kb));
    CAPTURE(serialize(inst.query));
    const ArgumentationFramework af = complete_af(inst.kb, inst.query, mode);

    // Attacks are exactly the derived ones.
    Edges derived;
    for (std::size_t i = 0; i < af.size(); ++i)
      for (std::size_t j = 0; j < af.size(); ++j)
        if (af.arguments()[i].concludes_conflict() &&
            af.arguments()[j].assumptions.count(af.arguments()[i].conflict()))
          derived.emplace_back(i, j);
    CHECK(af.attacks() == derived);

    const double pairs = static_cast<double>(inst.individuals.size() * inst.atoms.size());
    CHECK(static_cast<double>(af.size()) <= std::pow(3.0, pairs));

    const Signature sig = signature_of(inst.kb, inst.query);
    std::vector<Proposition> probes;
    std::vector<std::size_t> conflict_args;
    for (std::size_t i = 0; i < af.size() && probes.size() < 64; ++i) {
      const Argument& a = af.arguments()[i];
      CHECK_FALSE((a.concludes_conflict() && a.assumptions.count(a.conflict()) > 0));
      if (!a.concludes_conflict()) continue;
      conflict_args.push_back(i);
      probes.push_back(Proposition::concept_assertion(a.conflict()));
    }
    // Every conflict argument is sound: models free of conflicts on its
    // assumptions value the concluded assertion {t,f}.
    const ModelSummary summary = summarize_models(inst.kb, sig, mode, probes);
    for (std::size_t p = 0; p < conflict_args.size(); ++p) {
      const Argument& a = af.arguments()[conflict_args[p]];
      for (const ConflictClass& c : summary.classes) {
        const bool respects = std::none_of(a.assumptions.begin(), a.assumptions.end(),
                                           [&](const auto& s) { return c.conflicts.count(s) > 0; });
        if (respects) CHECK(c.conflicts.count(a.conflict()) == 1);
      }
    }

    const auto stable = stable_extensions(af);
    const auto preferred = preferred_extensions(af);
    for (const auto& s : stable)
      CHECK(std::find(preferred.begin(), preferred.end(), s) != preferred.end());
  }
}
