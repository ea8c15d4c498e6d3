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

// Decisive and strongly decisive coalitions, absolute and relative to an
// indifferent set N, and extraction of the coalition map N -> Delta N.
//
// Decisiveness is tested on a single worst-case profile, which is sound once
// the rule is known to satisfy unanimity and IIA on three or more
// alternatives (these imply neutrality and monotonicity).  ArrovianRule is the
// proof that the check was done.  DecisivenessOracle quantifies over the
// whole domain instead and exists to validate the shortcut.

#pragma once

#include <vector>

#include "arrovian/coalitions.hpp"
#include "arrovian/profiles.hpp"
#include "arrovian/rules.hpp"

namespace arrovian {

/// A rule verified to satisfy unanimity and IIA on its profile domain.
class ArrovianRule {
 public:
  /// Exhaustively checks unanimity and IIA.  Throws InputError when m < 3,
  /// NotArrovianError when an axiom fails, GuardError past the guard.
  static ArrovianRule verify(const Rule& rule, Domain domain = Domain::Partial);
  /// Same, over the measurable profiles of a partition.
  static ArrovianRule verify(const Rule& rule, Domain domain, std::vector<VoterSet> blocks);

  const Rule& rule() const { return rule_; }
  const ProfileSpace& space() const { return space_; }
  int n() const { return rule_.n(); }
  int m() const { return rule_.m(); }

 private:
  ArrovianRule(Rule rule, ProfileSpace space)
      : rule_(std::move(rule)), space_(std::move(space)) {}

  Rule rule_;
  ProfileSpace space_;
};

/// Does K force a >= b whenever N is indifferent (K unanimous strictly, or
/// weakly when strong)?  Decided on the worst-case profile for (a, b) = (0, 1).
/// Throws InputError when K and N overlap, leave {1..n}, or the worst-case
/// profile falls outside the rule's domain.
bool is_decisive(const ArrovianRule& rule, VoterSet coalition, VoterSet indifferent,
                 bool strong);

/// Intersection of all coalitions of I \ N decisive relative to N.
VoterSet minimal_decisive(const ArrovianRule& rule, VoterSet indifferent, bool strong);

/// N -> minimal_decisive(N) | N over all subsets.
DeltaMap extract_delta(const ArrovianRule& rule);

/// {K : K decisive relative to the empty set}.
SetFilter decisive_filter(const ArrovianRule& rule, bool strong);

/// Full-quantification decisiveness: every profile of the domain and every
/// ordered pair is inspected.  Evaluates the rule once per profile.
class DecisivenessOracle {
 public:
  explicit DecisivenessOracle(const Rule& rule, Domain domain = Domain::Partial);

  bool is_decisive(VoterSet coalition, VoterSet indifferent, bool strong) const;

 private:
  ProfileSpace space_;
  std::vector<std::uint32_t> outcomes_;
};

}  // namespace arrovian
