// Copyright 2026 The Arrovian Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "arrovian/classify.hpp"

#include "arrovian/error.hpp"

namespace arrovian {

namespace {

std::uint32_t next_superset(std::uint32_t bits, std::uint32_t free) {
  return ((bits | ~free) + 1U) & free;
}

void require_valid(const DeltaMap& delta) {
  const ValidationReport report = validate_delta(delta);
  if (!report.cond1) throw ValidationError("coalition map violates condition (1)");
  if (!report.cond2) throw ValidationError("coalition map violates condition (2)");
}

struct Search {
  int n;
  bool require_cond2;
  std::uint32_t full;
  std::vector<VoterSet> table;
  std::vector<DeltaMap> out;

  void run(std::uint32_t mask) {
    if (mask > full) {
      if (out.size() >= kProfileGuard) throw GuardError("too many coalition maps");
      out.emplace_back(n, table);
      return;
    }
    std::uint32_t lower = mask;
    for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
      lower |= table[mask & ~(rest & (~rest + 1U))].mask;
    }
    if (require_cond2 && mask != 0) {
      std::optional<std::uint32_t> forced;
      for (std::uint32_t sub = (mask - 1) & mask;; sub = (sub - 1) & mask) {
        const std::uint32_t added = mask & ~sub;
        if ((table[sub].mask & added) == 0) {
          const std::uint32_t value = table[sub].mask | added;
          if (forced && *forced != value) return;
          forced = value;
        }
        if (sub == 0) break;
      }
      if (forced) {
        if ((lower & ~*forced) != 0) return;
        table[mask] = VoterSet{*forced};
        run(mask + 1);
        return;
      }
    }
    const std::uint32_t free = full & ~lower;
    for (std::uint32_t extra = 0;; extra = next_superset(extra, free)) {
      table[mask] = VoterSet{lower | extra};
      run(mask + 1);
      if (extra == free) break;
    }
  }
};

}  // namespace

const char* condition_name(Condition c) {
  switch (c) {
    case Condition::Monotonicity: return "1";
    case Condition::Minimality: return "2";
    case Condition::WeakMinimality: return "2'";
  }
  return "?";
}

ValidationReport validate_delta(const DeltaMap& delta) {
  ValidationReport report;
  const std::uint32_t full = VoterSet::all(delta.n()).mask;
  auto fail = [&report](bool& flag, Condition c, std::uint32_t n, std::uint32_t m) {
    if (flag) report.violations.push_back({c, VoterSet{n}, VoterSet{m}});
    flag = false;
  };
  for (std::uint32_t n = 0; n <= full; ++n) {
    const VoterSet big = delta.at(VoterSet{n});
    if (!VoterSet{n}.subset_of(big)) fail(report.cond1, Condition::Monotonicity, n, n);
    for (std::uint32_t m = n;; m = (m - 1) & n) {
      if (!delta.at(VoterSet{m}).subset_of(big)) {
        fail(report.cond1, Condition::Monotonicity, n, m);
      }
      if (m == 0) break;
    }
  }
  for (std::uint32_t n = 0; n <= full; ++n) {
    const VoterSet base = delta.at(VoterSet{n});
    const std::uint32_t rest = full & ~n;
    for (std::uint32_t m = rest;; m = (m - 1) & rest) {
      if (base.disjoint(VoterSet{m})) {
        const VoterSet joined = delta.at(VoterSet{n | m});
        const VoterSet expected = base | VoterSet{m};
        if (joined != expected) fail(report.cond2, Condition::Minimality, n, m);
        if (!joined.subset_of(expected)) fail(report.cond2prime, Condition::WeakMinimality, n, m);
      }
      if (m == 0) break;
    }
  }
  return report;
}

std::vector<DeltaMap> enumerate_delta_maps(int n, bool require_cond2) {
  if (n < 0 || n > kMaxEnumerationVoters) {
    throw InputError("enumeration supports 0 to 4 voters");
  }
  const std::uint32_t full = VoterSet::all(n).mask;
  Search search{n, require_cond2, full, std::vector<VoterSet>(full + 1U), {}};
  search.run(0);
  return std::move(search.out);
}

bool round_trip(const DeltaMap& delta, int m) {
  require_valid(delta);
  const Rule rule = Rule::from_spec(RuleSpec{delta.n(), rule::Delta{delta}}, m);
  return extract_delta(ArrovianRule::verify(rule)) == delta;
}

Chain chain_of(const DeltaMap& delta) {
  if (!satisfies_monotonicity(delta)) {
    throw ValidationError("coalition map violates condition (1)");
  }
  std::vector<VoterSet> sets;
  VoterSet current;
  for (VoterSet next = delta.at(current); next != current; next = delta.at(current)) {
    sets.push_back(next);
    current = next;
  }
  return Chain(std::move(sets));
}

bool strong_lex_equals_lex(const Chain& chain) {
  for (int lambda = 1; lambda < chain.length(); ++lambda) {
    if ((chain.at(lambda) - chain.at(lambda - 1)).size() != 1) return false;
  }
  return true;
}

DeltaMap lex_delta(const Chain& chain, int n) {
  for (VoterSet s : chain.sets()) check_subset(s, n);
  std::vector<VoterSet> table;
  for (std::uint32_t mask = 0; mask <= VoterSet::all(n).mask; ++mask) {
    const VoterSet tied{mask};
    VoterSet relative;
    for (VoterSet j : chain.sets()) {
      if (!j.subset_of(tied)) {
        relative = j - tied;
        break;
      }
    }
    table.push_back(relative | tied);
  }
  return DeltaMap(n, std::move(table));
}

DeltaMap strong_lex_delta(const Chain& chain, int n) {
  for (VoterSet s : chain.sets()) check_subset(s, n);
  std::vector<VoterSet> table;
  for (std::uint32_t mask = 0; mask <= VoterSet::all(n).mask; ++mask) {
    const VoterSet tied{mask};
    VoterSet relative;
    if (!chain.at(chain.length()).subset_of(tied)) {
      for (int lambda = 0;; ++lambda) {
        if ((chain.at(lambda + 1) & tied).subset_of(chain.at(lambda))) {
          relative = chain.at(lambda + 1) - tied;
          break;
        }
      }
    }
    table.push_back(relative | tied);
  }
  return DeltaMap(n, std::move(table));
}

SandwichReport sandwich_check(const ArrovianRule& rule) {
  SandwichReport report;
  report.chain = chain_of(extract_delta(rule));
  const Chain& chain = report.chain;
  const ProfileSpace& space = rule.space();
  for (std::size_t p = 0; p < space.size(); ++p) {
    const Profile pr = space.profile(p);
    const Preorder c = rule.rule()(pr);
    const Preorder lower = eval_strong_lex(chain, pr);
    const Preorder upper = eval_lex(chain, pr);
    report.lower_holds = report.lower_holds && is_subrelation(lower, c);
    report.upper_holds = report.upper_holds && is_subrelation(c, upper);
    report.lower_equal = report.lower_equal && lower == c;
    report.upper_equal = report.upper_equal && c == upper;
    report.lex_equal = report.lex_equal && lower == upper;
  }
  report.criterion_holds = report.lex_equal == strong_lex_equals_lex(chain);
  return report;
}

bool maps_linear_to_complete(const DeltaMap& delta, int m) {
  const Rule rule = Rule::from_spec(RuleSpec{delta.n(), rule::Delta{delta}}, m);
  const ProfileSpace space(m, delta.n(), Domain::Linear);
  for (std::size_t p = 0; p < space.size(); ++p) {
    if (!rule(space.profile(p)).is_complete()) return false;
  }
  return true;
}

std::optional<std::vector<int>> lex_sequence_of(const DeltaMap& delta) {
  for (std::uint32_t mask = 0; mask < delta.table().size(); ++mask) {
    if (delta.relative(VoterSet{mask}).size() > 1) return std::nullopt;
  }
  std::vector<int> sequence;
  VoterSet current;
  for (VoterSet next = delta.relative(current); !next.empty(); next = delta.relative(current)) {
    sequence.push_back(next.members().front());
    current = current | next;
  }
  return sequence;
}

std::optional<std::vector<int>> classify_linear_range(const DeltaMap& delta, int m) {
  require_valid(delta);
  const bool complete = maps_linear_to_complete(delta, m);
  auto sequence = lex_sequence_of(delta);
  if (complete != sequence.has_value()) {
    throw Error("completeness check disagrees with the cardinality criterion");
  }
  return sequence;
}

DeltaMap extend_from_linear(const ArrovianRule& rule) {
  const DeltaMap delta = extract_delta(rule);
  require_valid(delta);
  const ProfileSpace& space = rule.space();
  std::vector<std::uint32_t> outcomes;
  outcomes.reserve(space.size());
  for (std::size_t p = 0; p < space.size(); ++p) {
    outcomes.push_back(rule.rule()(space.profile(p)).bits());
  }
  auto restricts_to_rule = [&](const DeltaMap& candidate) {
    const Rule c = Rule::from_spec(RuleSpec{candidate.n(), rule::Delta{candidate}}, rule.m());
    for (std::size_t p = 0; p < space.size(); ++p) {
      if (c(space.profile(p)).bits() != outcomes[p]) return false;
    }
    return true;
  };
  if (!restricts_to_rule(delta)) {
    throw Error("extracted coalition map does not reproduce the rule");
  }
  for (const DeltaMap& other : enumerate_delta_maps(rule.n(), true)) {
    if (other != delta && restricts_to_rule(other)) {
      throw Error("arrovian extension is not unique");
    }
  }
  return delta;
}

const char* order_name(RuleOrder order) {
  switch (order) {
    case RuleOrder::Subset: return "subset";
    case RuleOrder::Superset: return "superset";
    case RuleOrder::Equal: return "equal";
    case RuleOrder::Incomparable: return "incomparable";
  }
  return "?";
}

RuleOrder order_compare(const DeltaMap& lhs, const DeltaMap& rhs) {
  if (lhs.n() != rhs.n()) throw InputError("coalition maps have different n");
  require_valid(lhs);
  require_valid(rhs);
  bool lhs_contains = true;
  bool rhs_contains = true;
  for (std::size_t k = 0; k < lhs.table().size(); ++k) {
    lhs_contains = lhs_contains && rhs.table()[k].subset_of(lhs.table()[k]);
    rhs_contains = rhs_contains && lhs.table()[k].subset_of(rhs.table()[k]);
  }
  if (lhs_contains && rhs_contains) return RuleOrder::Equal;
  if (lhs_contains) return RuleOrder::Subset;
  if (rhs_contains) return RuleOrder::Superset;
  return RuleOrder::Incomparable;
}

bool delta_prefers(const DeltaMap& delta, PairSignature sig, DeltaForm form) {
  const VoterSet strict = sig.strictly_for();
  switch (form) {
    case DeltaForm::Indifferent:
      return delta_prefers(delta, sig);
    case DeltaForm::Weak: {
      const std::uint32_t weak = sig.weakly_for.mask;
      for (std::uint32_t sub = weak;; sub = (sub - 1) & weak) {
        if (delta.relative(VoterSet{sub}).subset_of(strict)) return true;
        if (sub == 0) break;
      }
      return false;
    }
    case DeltaForm::Maximal:
      return delta.relative(sig.indifferent()).subset_of(strict);
  }
  return false;
}

}  // namespace arrovian
