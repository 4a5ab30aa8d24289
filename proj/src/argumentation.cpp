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


#include "paralogic/argumentation.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "paralogic/errors.hpp"

namespace paralogic {

namespace {

bool canonical_less(const ArgumentSet& a, const ArgumentSet& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

void sort_canonical(std::vector<ArgumentSet>& sets) {
  std::sort(sets.begin(), sets.end(), canonical_less);
}

std::string compact(const Proposition& p) {
  if (p.kind() == Proposition::Kind::ConceptAssertion)
    return p.individual() + ":" + serialize(p.concept_expr());
  return serialize(p);
}

/// Keeps the inclusion-minimal sets, ordered by size then lexicographically.
std::vector<AssumptionSet> minimize(std::vector<AssumptionSet> sets) {
  std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<AssumptionSet> out;
  for (auto& s : sets) {
    const bool covered = std::any_of(out.begin(), out.end(), [&](const auto& m) {
      return std::includes(s.begin(), s.end(), m.begin(), m.end());
    });
    if (!covered) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::string to_string(const Assumption& a) {
  return "~C(" + serialize(a) + ")";
}

std::string to_string(const Conclusion& c) {
  if (const auto* s = std::get_if<SignedProposition>(&c))
    return std::string(to_string(s->label)) + " " + compact(s->prop);
  return "C(" + serialize(std::get<Conflict>(c).assertion) + ")";
}

std::string to_string(const Argument& a) {
  std::string out = "({";
  bool first = true;
  for (const Assumption& s : a.assumptions) {
    if (!first) out += ", ";
    first = false;
    out += to_string(s);
  }
  return out + "}, " + to_string(a.conclusion) + ")";
}

std::vector<Argument> derive_arguments(const KnowledgeBase& kb,
                                       const SignedProposition& goal,
                                       SubsumptionMode mode,
                                       const ReasonerLimits& limits) {
  const ProofResult proof = prove(kb, goal, mode, limits.tableau());
  std::vector<Argument> out;
  for (const AssumptionSet& s : proof.assumption_sets) out.push_back({s, goal});
  return out;
}

std::vector<Argument> counter_arguments(const KnowledgeBase& kb,
                                        const Assumption& alpha,
                                        SubsumptionMode mode,
                                        const ReasonerLimits& limits) {
  const Proposition assertion = Proposition::concept_assertion(alpha);
  const ProofResult not_true =
      refute(kb, {Label::TBar, assertion}, mode, limits.tableau());
  if (not_true.kind == ProofKind::NotProvable) return {};
  const ProofResult not_false =
      refute(kb, {Label::FBar, assertion}, mode, limits.tableau());
  if (not_false.kind == ProofKind::NotProvable) return {};

  std::vector<AssumptionSet> unions;
  for (const AssumptionSet& l : not_true.assumption_sets) {
    for (const AssumptionSet& r : not_false.assumption_sets) {
      AssumptionSet u = l;
      u.insert(r.begin(), r.end());
      unions.push_back(std::move(u));
    }
  }
  std::vector<Argument> out;
  for (AssumptionSet& s : minimize(std::move(unions))) {
    if (s.count(alpha))
      throw std::logic_error("self-attacking argument for " + serialize(alpha));
    out.push_back({std::move(s), Conflict{alpha}});
  }
  return out;
}

std::vector<Argument> rotate(const Argument& a) {
  if (!a.concludes_conflict())
    throw std::invalid_argument("rotate needs a conflict conclusion");
  if (a.assumptions.empty())
    throw std::invalid_argument("rotate needs at least one assumption");
  std::vector<Argument> out;
  for (const Assumption& alpha : a.assumptions) {
    AssumptionSet s = a.assumptions;
    s.erase(alpha);
    s.insert(a.conflict());
    out.push_back({std::move(s), Conflict{alpha}});
  }
  return out;
}

ArgumentationFramework::ArgumentationFramework(
    const std::vector<Argument>& arguments) {
  std::set<Argument> seen;
  for (const Argument& a : arguments)
    if (seen.insert(a).second) arguments_.push_back(a);
  attackers_.resize(arguments_.size());
  for (std::size_t i = 0; i < arguments_.size(); ++i) {
    if (!arguments_[i].concludes_conflict()) continue;
    for (std::size_t j = 0; j < arguments_.size(); ++j) {
      if (arguments_[j].assumptions.count(arguments_[i].conflict())) {
        attacks_.emplace_back(i, j);
        attackers_[j].push_back(i);
      }
    }
  }
}

bool ArgumentationFramework::attacks(std::size_t attacker,
                                     std::size_t target) const {
  const auto& a = attackers_.at(target);
  return std::find(a.begin(), a.end(), attacker) != a.end();
}

std::optional<std::size_t> ArgumentationFramework::find(const Argument& a) const {
  auto it = std::find(arguments_.begin(), arguments_.end(), a);
  if (it == arguments_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - arguments_.begin());
}

AssumptionSet ArgumentationFramework::assumptions() const {
  AssumptionSet out;
  for (const Argument& a : arguments_)
    out.insert(a.assumptions.begin(), a.assumptions.end());
  return out;
}

ArgumentationFramework complete_af(const KnowledgeBase& kb,
                                   const Proposition& query,
                                   SubsumptionMode mode,
                                   const ReasonerLimits& limits) {
  std::vector<Argument> args;
  std::set<Argument> seen;
  std::vector<Assumption> pending;
  std::set<Assumption> queued;
  auto add = [&](Argument a) {
    if (seen.count(a)) return;
    if (args.size() >= limits.max_arguments)
      throw ResourceCapError("argument budget of " +
                             std::to_string(limits.max_arguments) +
                             " exhausted");
    for (const Assumption& s : a.assumptions)
      if (queued.insert(s).second) pending.push_back(s);
    seen.insert(a);
    args.push_back(std::move(a));
  };

  for (Argument& a : derive_arguments(kb, {Label::T, query}, mode, limits))
    add(std::move(a));
  for (std::size_t i = 0; i < pending.size(); ++i) {
    const Assumption alpha = pending[i];
    for (const Argument& c : counter_arguments(kb, alpha, mode, limits)) {
      add(c);
      if (!c.assumptions.empty())
        for (Argument& r : rotate(c)) add(std::move(r));
    }
  }
  return ArgumentationFramework(args);
}

bool conflict_free(const ArgumentationFramework& af, const ArgumentSet& s) {
  for (std::size_t a : s)
    for (std::size_t b : s)
      if (af.attacks(a, b)) return false;
  return true;
}

bool defends(const ArgumentationFramework& af, const ArgumentSet& s,
             std::size_t a) {
  for (std::size_t attacker : af.attackers_of(a)) {
    const bool countered = std::any_of(s.begin(), s.end(), [&](std::size_t d) {
      return af.attacks(d, attacker);
    });
    if (!countered) return false;
  }
  return true;
}

bool admissible(const ArgumentationFramework& af, const ArgumentSet& s) {
  return conflict_free(af, s) &&
         std::all_of(s.begin(), s.end(),
                     [&](std::size_t a) { return defends(af, s, a); });
}

bool is_stable(const ArgumentationFramework& af, const ArgumentSet& s) {
  if (!conflict_free(af, s)) return false;
  for (std::size_t x = 0; x < af.size(); ++x) {
    if (std::binary_search(s.begin(), s.end(), x)) continue;
    const auto& att = af.attackers_of(x);
    const bool hit = std::any_of(att.begin(), att.end(), [&](std::size_t a) {
      return std::binary_search(s.begin(), s.end(), a);
    });
    if (!hit) return false;
  }
  return true;
}

namespace {

constexpr std::size_t kExhaustiveLimit = 20;

std::vector<ArgumentSet> stable_exhaustive(const ArgumentationFramework& af) {
  const std::size_t n = af.size();
  std::vector<std::uint32_t> targets(n, 0);
  for (const auto& [a, b] : af.attacks()) targets[a] |= std::uint32_t{1} << b;
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<ArgumentSet> out;
  for (std::uint32_t s = 0; s <= full; ++s) {
    std::uint32_t hit = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (s >> i & 1U) hit |= targets[i];
    if ((hit & s) != 0 || (hit | s) != full) continue;
    ArgumentSet e;
    for (std::size_t i = 0; i < n; ++i)
      if (s >> i & 1U) e.push_back(i);
    out.push_back(std::move(e));
  }
  sort_canonical(out);
  return out;
}

/// Decides arguments in index order; an OUT argument must end up attacked
/// by an IN one.
class StableLabelling {
 public:
  explicit StableLabelling(const ArgumentationFramework& af)
      : af_(af), state_(af.size(), kUndecided), targets_(af.size()) {
    for (const auto& [a, b] : af.attacks()) targets_[a].push_back(b);
  }

  std::vector<ArgumentSet> run() {
    search(0);
    sort_canonical(found_);
    return std::move(found_);
  }

 private:
  enum State : signed char { kUndecided = -1, kOut = 0, kIn = 1 };

  void search(std::size_t i) {
    if (i == af_.size()) {
      ArgumentSet e;
      for (std::size_t k = 0; k < state_.size(); ++k)
        if (state_[k] == kIn) e.push_back(k);
      found_.push_back(std::move(e));
      return;
    }
    for (State choice : {kIn, kOut}) {
      if (choice == kIn && !can_be_in(i)) continue;
      state_[i] = choice;
      if (out_labels_justified(i)) search(i + 1);
      state_[i] = kUndecided;
    }
  }

  bool can_be_in(std::size_t i) const {
    for (std::size_t a : af_.attackers_of(i))
      if (a == i || state_[a] == kIn) return false;
    for (std::size_t t : targets_[i])
      if (state_[t] == kIn) return false;
    return true;
  }

  // Deciding i settles i itself and may settle the last attacker of
  // each of its targets.
  bool out_labels_justified(std::size_t i) const {
    if (!justified(i)) return false;
    for (std::size_t t : targets_[i])
      if (!justified(t)) return false;
    return true;
  }

  bool justified(std::size_t k) const {
    if (state_[k] != kOut) return true;
    bool pending = false;
    for (std::size_t a : af_.attackers_of(k)) {
      if (state_[a] == kIn) return true;
      if (state_[a] == kUndecided) pending = true;
    }
    return pending;
  }

  const ArgumentationFramework& af_;
  std::vector<State> state_;
  std::vector<std::vector<std::size_t>> targets_;
  std::vector<ArgumentSet> found_;
};

}  // namespace

std::vector<ArgumentSet> stable_extensions_by_labelling(
    const ArgumentationFramework& af) {
  return StableLabelling(af).run();
}

std::vector<ArgumentSet> stable_extensions(const ArgumentationFramework& af) {
  if (af.size() < kExhaustiveLimit) return stable_exhaustive(af);
  return stable_extensions_by_labelling(af);
}

ArgumentSet grounded_extension(const ArgumentationFramework& af) {
  ArgumentSet s;
  for (;;) {
    ArgumentSet next;
    for (std::size_t a = 0; a < af.size(); ++a)
      if (defends(af, s, a)) next.push_back(a);
    if (next == s) return s;
    s = std::move(next);
  }
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool test_bit(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64) & 1U) != 0; }
void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }
void clear_bit(Bits& b, std::size_t i) { b[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

bool subset(const Bits& a, const Bits& b) {
  for (std::size_t w = 0; w < a.size(); ++w)
    if ((a[w] & ~b[w]) != 0) return false;
  return true;
}

}  // namespace

std::vector<ArgumentSet> preferred_extensions(const ArgumentationFramework& af) {
  const std::size_t n = af.size();
  const std::size_t words = (n + 63) / 64;
  std::vector<Bits> targets(n, Bits(words, 0)), attackers(n, Bits(words, 0));
  for (const auto& [a, b] : af.attacks()) {
    set_bit(targets[a], b);
    set_bit(attackers[b], a);
  }

  // The grounded extension lies inside every preferred one, so only the
  // arguments it neither contains nor attacks are searched.
  const ArgumentSet grounded = grounded_extension(af);
  Bits current(words, 0), hit(words, 0);
  for (std::size_t g : grounded) {
    set_bit(current, g);
    for (std::size_t w = 0; w < words; ++w) hit[w] |= targets[g][w];
  }
  std::vector<std::size_t> free;
  for (std::size_t a = 0; a < n; ++a)
    if (!test_bit(current, a) && !test_bit(hit, a)) free.push_back(a);

  // Admissible: conflict-free, and every attacker of a member is attacked.
  std::vector<std::pair<std::size_t, Bits>> admissible_sets;
  std::size_t members = grounded.size();
  auto search = [&](auto& self, std::size_t i) -> void {
    if (i == free.size()) {
      Bits attacked_by(words, 0), attacking(words, 0);
      for (std::size_t a = 0; a < n; ++a) {
        if (!test_bit(current, a)) continue;
        for (std::size_t w = 0; w < words; ++w) {
          attacked_by[w] |= targets[a][w];
          attacking[w] |= attackers[a][w];
        }
      }
      if (subset(attacking, attacked_by)) admissible_sets.emplace_back(members, current);
      return;
    }
    const std::size_t a = free[i];
    bool compatible = !test_bit(targets[a], a);
    for (std::size_t w = 0; w < words && compatible; ++w)
      compatible = ((targets[a][w] | attackers[a][w]) & current[w]) == 0;
    if (compatible) {
      set_bit(current, a);
      ++members;
      self(self, i + 1);
      --members;
      clear_bit(current, a);
    }
    self(self, i + 1);
  };
  search(search, 0);

  // Largest first: a set is maximal iff no kept set contains it.
  std::stable_sort(admissible_sets.begin(), admissible_sets.end(),
                   [](const auto& x, const auto& y) { return x.first > y.first; });
  std::vector<Bits> maximal;
  for (const auto& [size, bits] : admissible_sets) {
    const bool covered = std::any_of(maximal.begin(), maximal.end(),
                                     [&](const Bits& m) { return subset(bits, m); });
    if (!covered) maximal.push_back(bits);
  }

  std::vector<ArgumentSet> out;
  for (const Bits& m : maximal) {
    ArgumentSet e;
    for (std::size_t a = 0; a < n; ++a)
      if (test_bit(m, a)) e.push_back(a);
    out.push_back(std::move(e));
  }
  sort_canonical(out);
  return out;
}

AssumptionSet allowed_assumptions(const ArgumentationFramework& af,
                                  const ArgumentSet& e) {
  AssumptionSet out = af.assumptions();
  for (std::size_t i : e) {
    const Argument& a = af.arguments().at(i);
    if (a.concludes_conflict()) out.erase(a.conflict());
  }
  return out;
}

}  // namespace paralogic
