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


#include "paralogic/oracle.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <map>
#include <tuple>
#include <unordered_map>

#include "paralogic/errors.hpp"

namespace paralogic {

namespace {

using kernels::Instr;
using kernels::Kernel;
using kernels::Lanes;
using kernels::Op;
using kernels::Program;

constexpr std::size_t kMaxLanePairs = 5;  // 3^5 = 243 <= 256 lanes

// Pair index = individual * |concepts| + concept, both in sorted order.
// The first `lane_pairs` pairs vary across lanes; the rest, and the role
// pairs, are fixed per block.
struct Layout {
  std::vector<std::string> individuals;
  std::vector<std::string> concepts;
  std::vector<std::string> roles;
  std::size_t lane_pairs = 0;

  std::size_t pairs() const { return individuals.size() * concepts.size(); }
  std::size_t role_bits() const {
    return roles.size() * individuals.size() * individuals.size();
  }
  std::uint32_t positive_input(std::size_t pair) const {
    return static_cast<std::uint32_t>(2 * pair);
  }
  std::uint32_t negative_input(std::size_t pair) const {
    return static_cast<std::uint32_t>(2 * pair + 1);
  }
  std::uint32_t role_input(std::size_t bit) const {
    return static_cast<std::uint32_t>(2 * pairs() + bit);
  }
  std::uint32_t num_inputs() const {
    return static_cast<std::uint32_t>(2 * pairs() + role_bits());
  }
  std::size_t individual_index(const std::string& name) const {
    auto it = std::lower_bound(individuals.begin(), individuals.end(), name);
    if (it == individuals.end() || *it != name)
      throw UnknownIdentifierError("individual", name);
    return static_cast<std::size_t>(it - individuals.begin());
  }
  std::size_t pair_index(std::size_t ind, const std::string& concept_name) const {
    auto it = std::lower_bound(concepts.begin(), concepts.end(), concept_name);
    if (it == concepts.end() || *it != concept_name)
      throw UnknownIdentifierError("concept", concept_name);
    return ind * concepts.size() +
           static_cast<std::size_t>(it - concepts.begin());
  }
  std::size_t role_bit(const std::string& role, std::size_t from,
                       std::size_t to) const {
    auto it = std::lower_bound(roles.begin(), roles.end(), role);
    if (it == roles.end() || *it != role)
      throw UnknownIdentifierError("role", role);
    const std::size_t n = individuals.size();
    return static_cast<std::size_t>(it - roles.begin()) * n * n + from * n + to;
  }
};

Layout make_layout(const Signature& sig) {
  Layout l;
  l.individuals.assign(sig.individuals.begin(), sig.individuals.end());
  l.concepts.assign(sig.atomic_concepts.begin(), sig.atomic_concepts.end());
  l.roles.assign(sig.roles.begin(), sig.roles.end());
  l.lane_pairs = std::min(kMaxLanePairs, l.pairs());
  return l;
}

std::uint64_t checked_model_count(const Layout& l, std::uint64_t cap) {
  // Conflict keys are 64-bit masks over the pairs.
  if (l.pairs() > 40 || l.role_bits() > 40)
    throw ResourceCapError("oracle model space exceeds the enumeration budget");
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < l.pairs(); ++i) {
    n *= 3;
    if (n > cap) break;
  }
  for (std::size_t i = 0; i < l.role_bits() && n <= cap; ++i) n *= 2;
  if (n > cap)
    throw ResourceCapError("oracle model space exceeds the budget of " +
                           std::to_string(cap) + " models");
  return n;
}

// Hash-consed circuit construction with constant folding.
class CircuitBuilder {
 public:
  explicit CircuitBuilder(std::uint32_t num_inputs) {
    program_.num_inputs = num_inputs;
    program_.num_registers = num_inputs;
    zero_ = emit_raw(Op::Zero, 0, 0);
    ones_ = emit_raw(Op::Ones, 0, 0);
  }

  std::uint32_t zero() const { return zero_; }
  std::uint32_t ones() const { return ones_; }

  std::uint32_t negate(std::uint32_t a) {
    if (a == zero_) return ones_;
    if (a == ones_) return zero_;
    if (auto it = negation_of_.find(a); it != negation_of_.end())
      return it->second;
    const std::uint32_t r = emit(Op::Not, a, a);
    negation_of_[r] = a;
    negation_of_[a] = r;
    return r;
  }
  std::uint32_t conj(std::uint32_t a, std::uint32_t b) {
    if (a == zero_ || b == zero_) return zero_;
    if (a == ones_) return b;
    if (b == ones_ || a == b) return a;
    return emit(Op::And, std::min(a, b), std::max(a, b));
  }
  std::uint32_t disj(std::uint32_t a, std::uint32_t b) {
    if (a == ones_ || b == ones_) return ones_;
    if (a == zero_) return b;
    if (b == zero_ || a == b) return a;
    return emit(Op::Or, std::min(a, b), std::max(a, b));
  }
  /// a & ~b
  std::uint32_t and_not(std::uint32_t a, std::uint32_t b) {
    if (a == zero_ || b == ones_) return zero_;
    if (b == zero_) return a;
    if (a == ones_) return negate(b);
    if (a == b) return zero_;
    return emit(Op::AndNot, a, b);
  }
  std::uint32_t implies(std::uint32_t a, std::uint32_t b) {
    return negate(and_not(a, b));
  }

  Program take() { return std::move(program_); }

 private:
  std::uint32_t emit(Op op, std::uint32_t a, std::uint32_t b) {
    const auto key = std::make_tuple(op, a, b);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const std::uint32_t r = emit_raw(op, a, b);
    memo_.emplace(key, r);
    return r;
  }
  std::uint32_t emit_raw(Op op, std::uint32_t a, std::uint32_t b) {
    const std::uint32_t r = program_.num_registers++;
    program_.code.push_back(Instr{op, r, a, b});
    return r;
  }

  Program program_;
  std::uint32_t zero_, ones_;
  std::map<std::tuple<Op, std::uint32_t, std::uint32_t>, std::uint32_t> memo_;
  std::map<std::uint32_t, std::uint32_t> negation_of_;
};

struct Polarity {
  std::uint32_t positive;
  std::uint32_t negative;
};

class PropositionCompiler {
 public:
  PropositionCompiler(const Layout& layout, SubsumptionMode mode)
      : layout_(layout), mode_(mode), builder_(layout.num_inputs()) {}

  Polarity concept_at(const Concept& c, std::size_t ind) {
    switch (c.kind()) {
      case Concept::Kind::Atomic: {
        const std::size_t p = layout_.pair_index(ind, c.name());
        return {layout_.positive_input(p), layout_.negative_input(p)};
      }
      case Concept::Kind::Top: return {builder_.ones(), builder_.zero()};
      case Concept::Kind::Bottom: return {builder_.zero(), builder_.ones()};
      case Concept::Kind::Not: {
        const Polarity in = concept_at(c.lhs(), ind);
        return {in.negative, in.positive};
      }
      case Concept::Kind::And: {
        const Polarity l = concept_at(c.lhs(), ind);
        const Polarity r = concept_at(c.rhs(), ind);
        return {builder_.conj(l.positive, r.positive),
                builder_.disj(l.negative, r.negative)};
      }
      case Concept::Kind::Or: {
        const Polarity l = concept_at(c.lhs(), ind);
        const Polarity r = concept_at(c.rhs(), ind);
        return {builder_.disj(l.positive, r.positive),
                builder_.conj(l.negative, r.negative)};
      }
      case Concept::Kind::Exists:
      case Concept::Kind::Forall:
        break;
    }
    throw OracleInapplicableError("oracle cannot evaluate quantified concepts");
  }

  /// The t and f bits of a proposition.
  Polarity proposition(const Proposition& p) {
    switch (p.kind()) {
      case Proposition::Kind::ConceptAssertion:
        return concept_at(p.concept_expr(),
                          layout_.individual_index(p.individual()));
      case Proposition::Kind::RoleAssertion: {
        const std::uint32_t bit = layout_.role_input(layout_.role_bit(
            p.role(), layout_.individual_index(p.subject()),
            layout_.individual_index(p.object())));
        return {bit, builder_.negate(bit)};
      }
      case Proposition::Kind::Subsumption:
      case Proposition::Kind::Equality: {
        const bool eq = p.kind() == Proposition::Kind::Equality;
        std::uint32_t holds = builder_.ones();
        for (std::size_t o = 0; o < layout_.individuals.size(); ++o) {
          const Polarity c = concept_at(p.lhs(), o);
          const Polarity d = concept_at(p.rhs(), o);
          holds = builder_.conj(holds, subsumed_at(c, d));
          if (eq) holds = builder_.conj(holds, subsumed_at(d, c));
        }
        return {holds, builder_.negate(holds)};
      }
    }
    return {builder_.zero(), builder_.ones()};
  }

  CircuitBuilder& builder() { return builder_; }

 private:
  std::uint32_t subsumed_at(const Polarity& c, const Polarity& d) {
    if (mode_ == SubsumptionMode::Material)
      return builder_.disj(c.negative, d.positive);
    return builder_.conj(builder_.implies(c.positive, d.positive),
                         builder_.implies(d.negative, c.negative));
  }

  const Layout& layout_;
  SubsumptionMode mode_;
  CircuitBuilder builder_;
};

struct Compiled {
  Program program;
  std::uint32_t sat = 0;
  std::vector<std::uint32_t> probe_true;
  std::vector<std::uint32_t> probe_false;
};

Compiled compile(const Layout& layout, const KnowledgeBase& kb,
                 SubsumptionMode mode, const std::vector<Proposition>& probes) {
  PropositionCompiler pc(layout, mode);
  Compiled out;
  out.sat = pc.builder().ones();
  for (const Proposition& p : kb.propositions())
    out.sat = pc.builder().conj(out.sat, pc.proposition(p).positive);
  for (const Proposition& p : probes) {
    const Polarity v = pc.proposition(p);
    out.probe_true.push_back(v.positive);
    out.probe_false.push_back(v.negative);
  }
  out.program = pc.builder().take();
  return out;
}

// Value digits: 0 = {t}, 1 = {f}, 2 = {t,f}.
constexpr bool digit_positive(int d) { return d != 1; }
constexpr bool digit_negative(int d) { return d != 0; }

// Per-lane constants for the lane pairs.
struct LaneTables {
  std::size_t valid_lanes = 1;
  std::vector<Lanes> positive;  // per lane pair
  std::vector<Lanes> negative;
  std::vector<Lanes> pattern;   // lanes whose lane-pair conflicts equal p
  std::vector<std::array<std::uint8_t, kMaxLanePairs>> digits;  // per lane
};

LaneTables make_lane_tables(std::size_t k) {
  LaneTables t;
  for (std::size_t j = 0; j < k; ++j) t.valid_lanes *= 3;
  t.positive.assign(k, Lanes::zeros());
  t.negative.assign(k, Lanes::zeros());
  t.pattern.assign(std::size_t{1} << k, Lanes::zeros());
  t.digits.resize(t.valid_lanes);
  for (std::size_t lane = 0; lane < t.valid_lanes; ++lane) {
    std::size_t rest = lane, pattern = 0;
    for (std::size_t j = 0; j < k; ++j) {
      const int d = static_cast<int>(rest % 3);
      rest /= 3;
      t.digits[lane][j] = static_cast<std::uint8_t>(d);
      if (digit_positive(d)) t.positive[j].set(lane);
      if (digit_negative(d)) t.negative[j].set(lane);
      if (d == 2) pattern |= std::size_t{1} << j;
    }
    t.pattern[pattern].set(lane);
  }
  return t;
}

// State of the fixed (per-block) part of a candidate model.
struct Block {
  std::vector<std::uint8_t> outer_digits;  // pairs lane_pairs..pairs-1
  std::vector<std::uint8_t> role_bits;
  std::uint64_t outer_key = 0;
};

// Runs the program over every block of the model space. `visit` receives
// the block and the register file.
template <typename Visit>
void scan(const Layout& layout, const Compiled& compiled, const Kernel& kernel,
          const LaneTables& tables, Visit&& visit) {
  const Program& prog = compiled.program;
  std::vector<Lanes> regs(prog.num_registers, Lanes::zeros());
  const std::size_t k = layout.lane_pairs;
  for (std::size_t j = 0; j < k; ++j) {
    regs[layout.positive_input(j)] = tables.positive[j];
    regs[layout.negative_input(j)] = tables.negative[j];
  }
  Block block;
  block.outer_digits.assign(layout.pairs() - k, 0);
  block.role_bits.assign(layout.role_bits(), 0);

  auto load_block = [&] {
    block.outer_key = 0;
    for (std::size_t j = 0; j < block.outer_digits.size(); ++j) {
      const int d = block.outer_digits[j];
      regs[layout.positive_input(k + j)] =
          digit_positive(d) ? Lanes::ones() : Lanes::zeros();
      regs[layout.negative_input(k + j)] =
          digit_negative(d) ? Lanes::ones() : Lanes::zeros();
      if (d == 2) block.outer_key |= std::uint64_t{1} << (k + j);
    }
    for (std::size_t r = 0; r < block.role_bits.size(); ++r)
      regs[layout.role_input(r)] =
          block.role_bits[r] ? Lanes::ones() : Lanes::zeros();
  };
  // Odometer over outer digits (base 3) then role bits (base 2).
  auto advance = [&] {
    for (auto& d : block.outer_digits) {
      if (++d < 3) return true;
      d = 0;
    }
    for (auto& b : block.role_bits) {
      if (++b < 2) return true;
      b = 0;
    }
    return false;
  };

  do {
    load_block();
    kernel.run(prog.code.data(), prog.code.size(), regs.data());
    if (!visit(block, regs)) return;
  } while (advance());
}

struct Prepared {
  Layout layout;
  Compiled compiled;
  LaneTables tables;
  const Kernel* kernel;
};

Prepared prepare(const KnowledgeBase& kb, const Signature& sig,
                 SubsumptionMode mode, const std::vector<Proposition>& probes,
                 const OracleLimits& limits) {
  check_oracle_scope(kb, sig);
  for (const Proposition& p : probes)
    if (!p.is_quantifier_free())
      throw OracleInapplicableError("oracle probes must be quantifier free");
  Prepared p;
  p.layout = make_layout(sig);
  checked_model_count(p.layout, limits.max_models);
  p.compiled = compile(p.layout, kb, mode, probes);
  p.tables = make_lane_tables(p.layout.lane_pairs);
  p.kernel = limits.kernel ? limits.kernel : &kernels::active_kernel();
  return p;
}

ConflictSet conflicts_of(const Layout& layout, std::uint64_t key) {
  ConflictSet out;
  for (std::size_t p = 0; p < layout.pairs(); ++p) {
    if (key >> p & 1U)
      out.insert({layout.individuals[p / layout.concepts.size()],
                  layout.concepts[p % layout.concepts.size()]});
  }
  return out;
}

FiniteInterpretation materialize(const Layout& layout, const LaneTables& t,
                                 const Block& block, std::size_t lane) {
  FiniteInterpretation i(layout.individuals.size());
  for (std::size_t o = 0; o < layout.individuals.size(); ++o)
    i.set_individual(layout.individuals[o], static_cast<Object>(o));
  const std::size_t nc = layout.concepts.size();
  for (std::size_t c = 0; c < nc; ++c) {
    ObjectSet pos, neg;
    for (std::size_t o = 0; o < layout.individuals.size(); ++o) {
      const std::size_t p = o * nc + c;
      const int d = p < layout.lane_pairs
                        ? t.digits[lane][p]
                        : block.outer_digits[p - layout.lane_pairs];
      if (digit_positive(d)) pos.insert(static_cast<Object>(o));
      if (digit_negative(d)) neg.insert(static_cast<Object>(o));
    }
    i.set_concept(layout.concepts[c], std::move(pos), std::move(neg));
  }
  const std::size_t n = layout.individuals.size();
  for (std::size_t r = 0; r < layout.roles.size(); ++r) {
    std::set<ObjectPair> pairs;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (block.role_bits[r * n * n + x * n + y])
          pairs.insert({static_cast<Object>(x), static_cast<Object>(y)});
    i.set_role(layout.roles[r], std::move(pairs));
  }
  return i;
}

bool proper_subset(std::uint64_t a, std::uint64_t b) {
  return a != b && (a & ~b) == 0;
}

std::vector<std::uint64_t> minimal_keys(std::vector<std::uint64_t> keys) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k : keys) {
    const bool dominated = std::any_of(keys.begin(), keys.end(), [&](auto o) {
      return proper_subset(o, k);
    });
    if (!dominated) out.push_back(k);
  }
  return out;
}

struct KeyStats {
  std::uint64_t models = 0;
  std::uint64_t all_true = ~std::uint64_t{0};
  std::uint64_t all_false = ~std::uint64_t{0};
};

std::unordered_map<std::uint64_t, KeyStats> collect(const Prepared& p) {
  std::unordered_map<std::uint64_t, KeyStats> stats;
  const Kernel& kern = *p.kernel;
  const std::size_t probes = p.compiled.probe_true.size();
  scan(p.layout, p.compiled, kern, p.tables,
       [&](const Block& block, const std::vector<Lanes>& regs) {
         const Lanes& sat = regs[p.compiled.sat];
         for (std::size_t pat = 0; pat < p.tables.pattern.size(); ++pat) {
           const Lanes& mask = p.tables.pattern[pat];
           const std::uint32_t n = kern.count_and(sat, mask);
           if (n == 0) continue;
           KeyStats& s = stats[block.outer_key | pat];
           s.models += n;
           for (std::size_t i = 0; i < probes; ++i) {
             if (kern.any_and_not(sat, mask, regs[p.compiled.probe_true[i]]))
               s.all_true &= ~(std::uint64_t{1} << i);
             if (kern.any_and_not(sat, mask, regs[p.compiled.probe_false[i]]))
               s.all_false &= ~(std::uint64_t{1} << i);
           }
         }
         return true;
       });
  return stats;
}

bool canonical_less(const ConflictSet& a, const ConflictSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

void check_oracle_scope(const KnowledgeBase& kb, const Signature& sig) {
  if (!kb.is_quantifier_free())
    throw OracleInapplicableError(
        "oracle-inapplicable: the knowledge base uses quantified concepts");
  if (sig.individuals.empty())
    throw OracleInapplicableError(
        "oracle-inapplicable: no named individuals to build a domain from");
}

void for_each_model(const KnowledgeBase& kb, const Signature& sig,
                    SubsumptionMode mode,
                    const std::function<bool(const FiniteInterpretation&)>& visit,
                    const OracleLimits& limits) {
  const Prepared p = prepare(kb, sig, mode, {}, limits);
  scan(p.layout, p.compiled, *p.kernel, p.tables,
       [&](const Block& block, const std::vector<Lanes>& regs) {
         const Lanes& sat = regs[p.compiled.sat];
         for (std::size_t lane = 0; lane < p.tables.valid_lanes; ++lane) {
           if (sat.test(lane) &&
               !visit(materialize(p.layout, p.tables, block, lane)))
             return false;
         }
         return true;
       });
}

std::vector<FiniteInterpretation> enumerate_models(const KnowledgeBase& kb,
                                                   const Signature& sig,
                                                   SubsumptionMode mode,
                                                   const OracleLimits& limits) {
  std::vector<FiniteInterpretation> out;
  for_each_model(
      kb, sig, mode,
      [&](const FiniteInterpretation& i) {
        out.push_back(i);
        return true;
      },
      limits);
  return out;
}

ModelSummary summarize_models(const KnowledgeBase& kb, const Signature& sig,
                              SubsumptionMode mode,
                              const std::vector<Proposition>& probes,
                              const OracleLimits& limits) {
  if (probes.size() > 64)
    throw std::invalid_argument("at most 64 oracle probes are supported");
  const Prepared p = prepare(kb, sig, mode, probes, limits);
  const auto stats = collect(p);

  std::vector<std::uint64_t> keys;
  for (const auto& [key, s] : stats) keys.push_back(key);
  const std::vector<std::uint64_t> minimal = minimal_keys(keys);
  const std::uint64_t probe_mask =
      probes.size() == 64 ? ~std::uint64_t{0}
                          : (std::uint64_t{1} << probes.size()) - 1;

  ModelSummary out;
  std::vector<std::pair<ConflictClass, bool>> classes;
  for (const auto& [key, s] : stats) {
    ConflictClass c;
    c.conflicts = conflicts_of(p.layout, key);
    c.models = s.models;
    c.all_true = s.all_true & probe_mask;
    c.all_false = s.all_false & probe_mask;
    out.models += s.models;
    const bool is_min =
        std::find(minimal.begin(), minimal.end(), key) != minimal.end();
    classes.emplace_back(std::move(c), is_min);
  }
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    return canonical_less(a.first.conflicts, b.first.conflicts);
  });
  for (auto& [c, is_min] : classes) {
    if (is_min) out.minimal.push_back(out.classes.size());
    out.classes.push_back(std::move(c));
  }
  return out;
}

bool oracle_lp_entails(const KnowledgeBase& kb, const Proposition& query,
                       SubsumptionMode mode, const OracleLimits& limits) {
  if (!query.is_quantifier_free())
    throw OracleInapplicableError(
        "oracle-inapplicable: the query uses quantified concepts");
  const ModelSummary s =
      summarize_models(kb, signature_of(kb, query), mode, {query}, limits);
  return std::all_of(s.classes.begin(), s.classes.end(),
                     [](const ConflictClass& c) { return c.all_true & 1U; });
}

bool oracle_lpm_entails(const KnowledgeBase& kb, const Proposition& query,
                        SubsumptionMode mode, const OracleLimits& limits) {
  if (!query.is_quantifier_free())
    throw OracleInapplicableError(
        "oracle-inapplicable: the query uses quantified concepts");
  const ModelSummary s =
      summarize_models(kb, signature_of(kb, query), mode, {query}, limits);
  return std::all_of(s.minimal.begin(), s.minimal.end(), [&](std::size_t i) {
    return s.classes[i].all_true & 1U;
  });
}

std::vector<FiniteInterpretation> conflict_minimal_models(
    const KnowledgeBase& kb, const Signature& sig, SubsumptionMode mode,
    const OracleLimits& limits) {
  const Prepared p = prepare(kb, sig, mode, {}, limits);
  const auto stats = collect(p);
  std::vector<std::uint64_t> keys;
  for (const auto& [key, s] : stats) keys.push_back(key);
  const std::vector<std::uint64_t> minimal = minimal_keys(keys);

  std::vector<FiniteInterpretation> out;
  scan(p.layout, p.compiled, *p.kernel, p.tables,
       [&](const Block& block, const std::vector<Lanes>& regs) {
         const Lanes& sat = regs[p.compiled.sat];
         for (std::size_t pat = 0; pat < p.tables.pattern.size(); ++pat) {
           const std::uint64_t key = block.outer_key | pat;
           if (std::find(minimal.begin(), minimal.end(), key) == minimal.end())
             continue;
           const Lanes& mask = p.tables.pattern[pat];
           for (std::size_t lane = 0; lane < p.tables.valid_lanes; ++lane)
             if (sat.test(lane) && mask.test(lane))
               out.push_back(materialize(p.layout, p.tables, block, lane));
         }
         return true;
       });
  return out;
}

std::string canonical_model(const FiniteInterpretation& i,
                            const Signature& sig) {
  std::string out;
  auto append = [&](const std::string& item) {
    if (!out.empty()) out += ' ';
    out += item;
  };
  for (const auto& a : sig.individuals)
    for (const auto& c : sig.atomic_concepts)
      append(serialize(AtomicAssertion{a, c}) + "=" + to_string(i.value({a, c})));
  for (const auto& r : sig.roles) {
    const auto& pairs = i.role(r);
    for (const auto& a : sig.individuals)
      for (const auto& b : sig.individuals)
        if (pairs.count({i.individual(a), i.individual(b)}))
          append("(" + a + "," + b + "):" + r);
  }
  return out;
}

OracleReport run_oracle(const KnowledgeBase& kb, const Proposition& query,
                        SubsumptionMode mode, const OracleLimits& limits) {
  if (!query.is_quantifier_free())
    throw OracleInapplicableError(
        "oracle-inapplicable: the query uses quantified concepts");
  const Signature sig = signature_of(kb, query);
  const ModelSummary s = summarize_models(kb, sig, mode, {query}, limits);
  OracleReport r;
  r.models = s.models;
  r.lp = std::all_of(s.classes.begin(), s.classes.end(),
                     [](const ConflictClass& c) { return c.all_true & 1U; });
  r.lpm = std::all_of(s.minimal.begin(), s.minimal.end(), [&](std::size_t i) {
    return s.classes[i].all_true & 1U;
  });
  std::set<std::string> lines;
  for (const FiniteInterpretation& m : conflict_minimal_models(kb, sig, mode, limits))
    lines.insert(canonical_model(m, sig));
  r.minimal_models.assign(lines.begin(), lines.end());
  return r;
}

}  // namespace paralogic
