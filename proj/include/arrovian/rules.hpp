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

// Symbolic voting-rule families and their evaluators.
//
// Every family here decides the aggregate comparison of a pair (a, b) from
// the pair's signature alone, so the evaluators are written as predicates on
// PairSignature and lifted to whole profiles by assemble().

#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "arrovian/coalitions.hpp"
#include "arrovian/profiles.hpp"
#include "arrovian/relations.hpp"

namespace arrovian {

namespace rule {

struct Trivial {
  friend bool operator==(const Trivial&, const Trivial&) = default;
};
struct Pareto {
  VoterSet junta;
  friend bool operator==(const Pareto&, const Pareto&) = default;
};
struct Lex {
  Chain chain;
  friend bool operator==(const Lex&, const Lex&) = default;
};
struct StrongLex {
  Chain chain;
  friend bool operator==(const StrongLex&, const StrongLex&) = default;
};
/// Priority sequence of distinct 0-based voters.
struct LexSeq {
  std::vector<int> sequence;
  friend bool operator==(const LexSeq&, const LexSeq&) = default;
};
struct Delta {
  DeltaMap delta;
  friend bool operator==(const Delta&, const Delta&) = default;
};
struct Filter {
  SetFilter filter;
  friend bool operator==(const Filter&, const Filter&) = default;
};
struct Measurable {
  DMap dmap;
  friend bool operator==(const Measurable&, const Measurable&) = default;
};

}  // namespace rule

/// A symbolic voting system for the society {1..n}.
struct RuleSpec {
  using Variant = std::variant<rule::Trivial, rule::Pareto, rule::Lex, rule::StrongLex,
                               rule::LexSeq, rule::Delta, rule::Filter, rule::Measurable>;
  int n = 0;
  Variant variant;

  friend bool operator==(const RuleSpec&, const RuleSpec&) = default;
};

/// Throws InputError / ValidationError when the spec breaks its invariants
/// (sets outside {1..n}, repeated voters, Delta failing condition (1),
/// filters failing F1-F3).
void validate_rule(const RuleSpec& spec);

/// Short human-readable description, e.g. "lex {1}<{1,2}".
std::string describe(const RuleSpec& spec);

/// Aggregate a >= b decision of a signature-determined rule.
bool weakly_prefers(const RuleSpec& spec, PairSignature sig);

/// Builds the outcome relation from a pairwise decision.
Preorder assemble(const Profile& pr, const std::function<bool(PairSignature)>& decide);

Preorder evaluate(const RuleSpec& spec, const Profile& pr);

Preorder eval_pareto(VoterSet junta, const Profile& pr);
Preorder eval_lex(const Chain& chain, const Profile& pr);
Preorder eval_strong_lex(const Chain& chain, const Profile& pr);
Preorder eval_lex_seq(const std::vector<int>& sequence, const Profile& pr);
/// Throws ValidationError when Delta fails condition (1).
Preorder eval_delta(const DeltaMap& delta, const Profile& pr);
/// Throws ValidationError when the family fails F1-F3.
Preorder eval_filter(const SetFilter& filter, const Profile& pr);

/// a >= b for C_Delta: some N among the indifferent voters with delta N
/// inside the strict supporters.  Assumes condition (1).
bool delta_prefers(const DeltaMap& delta, PairSignature sig);
/// a >= b for the filter rule: the weak supporters belong to the filter.
bool filter_prefers(const SetFilter& filter, PairSignature sig);
/// a >= b for the measurable rule: some measurable N among the indifferent
/// voters whose relative generator lies inside the strict supporters.
bool dmap_prefers(const DMap& dmap, PairSignature sig);

/// A voting system as an opaque function, with its society and alternatives.
/// Wraps symbolic specs as well as ad-hoc rules written in tests.
class Rule {
 public:
  using Function = std::function<Preorder(const Profile&)>;

  Rule(int n, int m, Function fn, std::string name = "custom");
  /// Validates the spec and binds it to m alternatives.
  static Rule from_spec(const RuleSpec& spec, int m);

  int n() const { return n_; }
  int m() const { return m_; }
  const std::string& name() const { return name_; }
  /// Throws InputError when the profile does not match (n, m).
  Preorder operator()(const Profile& pr) const;

 private:
  int n_;
  int m_;
  Function fn_;
  std::string name_;
};

/// The rule restricted to the electorate I \ N, the voters of N being fixed
/// at A x A.  Voters keep their relative order.
Rule restrict_rule(const Rule& rule, VoterSet indifferent);

}  // namespace arrovian
