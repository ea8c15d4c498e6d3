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

// Exhaustive axiom checkers.
//
// The rule is evaluated once per profile of the space.  IIA, monotonicity and
// strong neutrality are then decided on signature buckets: every profile is
// filed under the (weakly_for, weakly_against) signature of each ordered pair,
// and the checks compare buckets instead of profile pairs.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arrovian/profiles.hpp"
#include "arrovian/rules.hpp"

namespace arrovian {

enum class AxiomKind {
  Unanimity,
  StrictUnanimity,
  StrongUnanimity,
  Monotonicity,
  IIA,
  Neutrality,
  StrongNeutrality,
  Anonymity,
};

inline constexpr AxiomKind kAllAxioms[] = {
    AxiomKind::Unanimity,  AxiomKind::StrictUnanimity, AxiomKind::StrongUnanimity,
    AxiomKind::Monotonicity, AxiomKind::IIA,           AxiomKind::Neutrality,
    AxiomKind::StrongNeutrality, AxiomKind::Anonymity,
};

/// Axioms every arrovian rule on three or more alternatives satisfies.
inline constexpr AxiomKind kArrovianSuite[] = {
    AxiomKind::Unanimity, AxiomKind::IIA, AxiomKind::Neutrality,
    AxiomKind::StrongNeutrality, AxiomKind::Monotonicity,
};

std::string_view axiom_name(AxiomKind kind);
/// Throws InputError on unknown names.
AxiomKind parse_axiom(std::string_view name);

/// A concrete counterexample.  Which fields are meaningful depends on the kind:
///  - unanimity variants: profiles[0], pair (a, b);
///  - IIA / monotonicity: profiles[0] has a >= b, profiles[1] does not;
///  - strong neutrality: profiles[0] has a >= b, profiles[1] lacks a2 >= b2,
///    with equal signatures;
///  - neutrality: profiles[0] and the alternative permutation;
///  - anonymity: profiles[0] and the voter permutation.
struct AxiomWitness {
  std::vector<Profile> profiles;
  Alt a = 0;
  Alt b = 1;
  Alt a2 = 0;
  Alt b2 = 1;
  Permutation permutation;
};

struct AxiomReport {
  AxiomKind kind;
  bool holds = true;
  std::optional<AxiomWitness> witness;
};

/// Outcomes of one rule over one profile space, with every axiom check.
class AxiomSuite {
 public:
  /// Evaluates the rule on every profile of the space (n and m must match).
  AxiomSuite(const Rule& rule, const ProfileSpace& space);

  AxiomReport check(AxiomKind kind) const;
  std::vector<AxiomReport> check(std::span<const AxiomKind> kinds) const;

  const ProfileSpace& space() const { return space_; }
  /// Outcome bits of profile `index`.
  std::uint32_t outcome(std::size_t index) const { return outcomes_[index]; }

 private:
  AxiomReport unanimity(AxiomKind kind) const;
  AxiomReport iia() const;
  AxiomReport monotonicity() const;
  AxiomReport strong_neutrality() const;
  AxiomReport neutrality() const;
  AxiomReport anonymity() const;

  ProfileSpace space_;
  int n_;
  int m_;
  std::vector<std::uint32_t> outcomes_;
};

/// Exhaustive check over all partial (or linear) profiles for the rule's n, m.
AxiomReport check_axiom(const Rule& rule, AxiomKind kind, Domain domain);

/// Unanimity and IIA over the given space.
bool is_arrovian(const Rule& rule, const ProfileSpace& space);

/// Re-evaluates the witness of a failed report; true iff the violation is
/// reproduced.
bool replay_witness(const Rule& rule, const AxiomReport& report);

}  // namespace arrovian
