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


// Classification of arrovian rules by their coalition maps: validation of
// conditions (1), (2) and (2'), exhaustive enumeration, chains and the
// lexicographic sandwich, linear-range classification and unique extension.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arrovian/coalitions.hpp"
#include "arrovian/decisive.hpp"
#include "arrovian/profiles.hpp"
#include "arrovian/rules.hpp"

namespace arrovian {

/// Largest society accepted by enumerate_delta_maps.
inline constexpr int kMaxEnumerationVoters = 4;

enum class Condition { Monotonicity, Minimality, WeakMinimality };

const char* condition_name(Condition c);

struct Violation {
  Condition condition;
  VoterSet n;
  VoterSet m;
};

struct ValidationReport {
  bool cond1 = true;
  bool cond2 = true;
  bool cond2prime = true;
  /// First witness found for each failing condition.
  std::vector<Violation> violations;

  bool valid() const { return cond1 && cond2; }
};

/// (1) over all M <= N, (2) and (2') over all disjoint (N, M).
ValidationReport validate_delta(const DeltaMap& delta);

/// Every table satisfying (1), and (2) when asked, in lexicographic order of
/// the tables read by ascending mask.  Throws InputError for n outside 0..4,
/// GuardError when the count passes kProfileGuard.
std::vector<DeltaMap> enumerate_delta_maps(int n, bool require_cond2);

/// extract_delta(C_Delta) == Delta, with C_Delta verified on m alternatives.
/// Throws ValidationError when Delta fails (1) or (2).
bool round_trip(const DeltaMap& delta, int m = 3);

/// J_1 = Delta {}, J_k+1 = Delta J_k up to the fixpoint.  Throws
/// ValidationError when Delta fails (1).
Chain chain_of(const DeltaMap& delta);

/// Lex_Omega and Lex'_Omega coincide exactly when every step of the chain
/// except possibly the last adds a single voter.
bool strong_lex_equals_lex(const Chain& chain);

/// Closed-form coalition maps of Lex_Omega and Lex'_Omega.
DeltaMap lex_delta(const Chain& chain, int n);
DeltaMap strong_lex_delta(const Chain& chain, int n);

struct SandwichReport {
  Chain chain;
  bool lower_holds = true;   // Lex'_Omega <= C on every profile
  bool upper_holds = true;   // C <= Lex_Omega on every profile
  bool lower_equal = true;   // Lex'_Omega == C on every profile
  bool upper_equal = true;   // C == Lex_Omega on every profile
  bool lex_equal = true;     // Lex'_Omega == Lex_Omega on every profile
  /// lex_equal agrees with strong_lex_equals_lex(chain).
  bool criterion_holds = true;

  bool ok() const { return lower_holds && upper_holds && criterion_holds; }
};

/// Sandwich of the rule between the lexicographic rules of its chain, over
/// every profile of the rule's domain.
SandwichReport sandwich_check(const ArrovianRule& rule);

/// Does C_Delta send every linear profile on m alternatives to a complete
/// outcome?  Exhaustive.
bool maps_linear_to_complete(const DeltaMap& delta, int m = 3);

/// The priority sequence read off the chain when every delta N has at most
/// one voter (0-based voters).
std::optional<std::vector<int>> lex_sequence_of(const DeltaMap& delta);

/// pi with C_Delta = Lex_pi when C_Delta maps linear profiles to complete
/// outcomes, nullopt otherwise.  Decided by the exhaustive check; throws
/// Error if it disagrees with lex_sequence_of.  Throws ValidationError when
/// Delta fails (1) or (2).
std::optional<std::vector<int>> classify_linear_range(const DeltaMap& delta, int m = 3);

/// The unique coalition map whose rule restricts to the given rule on linear
/// profiles.  Throws Error when the extraction does not reproduce the rule
/// or when another enumerated map restricts to the same rule.
DeltaMap extend_from_linear(const ArrovianRule& rule);

enum class RuleOrder { Subset, Superset, Equal, Incomparable };

const char* order_name(RuleOrder order);

/// Relation of C_Delta to C_Delta' as relations: C <= C' iff Delta >= Delta'.
/// Throws InputError on mismatched n.
RuleOrder order_compare(const DeltaMap& lhs, const DeltaMap& rhs);

/// Equivalent forms of the rule C_Delta.
enum class DeltaForm {
  Indifferent,  // some N with a ~_N b and a >_{delta N} b
  Weak,         // some N with a >=_N b and a >_{delta N} b
  Maximal,      // N the full indifferent set
};

bool delta_prefers(const DeltaMap& delta, PairSignature sig, DeltaForm form);

}  // namespace arrovian
