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

#include "arrovian/decisive.hpp"

#include "arrovian/axioms.hpp"
#include "arrovian/error.hpp"

namespace arrovian {

namespace {

void check_disjoint(VoterSet coalition, VoterSet indifferent, int n) {
  check_subset(coalition, n);
  check_subset(indifferent, n);
  if (!coalition.disjoint(indifferent)) {
    throw InputError("coalition and indifferent set overlap");
  }
}

}  // namespace

ArrovianRule ArrovianRule::verify(const Rule& rule, Domain domain) {
  return verify(rule, domain, {});
}

ArrovianRule ArrovianRule::verify(const Rule& rule, Domain domain,
                                  std::vector<VoterSet> blocks) {
  if (rule.m() < 3) {
    throw InputError("decisiveness analysis needs at least three alternatives");
  }
  ProfileSpace space(rule.m(), rule.n(), domain, std::move(blocks));
  const AxiomSuite suite(rule, space);
  for (AxiomKind kind : {AxiomKind::Unanimity, AxiomKind::IIA}) {
    if (!suite.check(kind).holds) {
      throw NotArrovianError("rule '" + rule.name() + "' violates " +
                             std::string(axiom_name(kind)));
    }
  }
  return ArrovianRule(rule, std::move(space));
}

bool is_decisive(const ArrovianRule& rule, VoterSet coalition, VoterSet indifferent,
                 bool strong) {
  check_disjoint(coalition, indifferent, rule.n());
  const Profile worst =
      worst_case_profile(rule.m(), rule.n(), 0, 1, indifferent, coalition, strong);
  if (!rule.space().index_of(worst)) {
    throw InputError("worst-case profile lies outside the rule's domain");
  }
  return rule.rule()(worst).weakly(0, 1);
}

VoterSet minimal_decisive(const ArrovianRule& rule, VoterSet indifferent, bool strong) {
  check_subset(indifferent, rule.n());
  const VoterSet rest = VoterSet::all(rule.n()) - indifferent;
  VoterSet meet = rest;
  for (std::uint32_t sub = rest.mask;; sub = (sub - 1) & rest.mask) {
    if (is_decisive(rule, VoterSet{sub}, indifferent, strong)) meet = meet & VoterSet{sub};
    if (sub == 0) break;
  }
  if (!is_decisive(rule, meet, indifferent, strong)) {
    throw NotArrovianError("intersection of decisive coalitions is not decisive");
  }
  return meet;
}

DeltaMap extract_delta(const ArrovianRule& rule) {
  std::vector<VoterSet> table;
  for (std::uint32_t mask = 0; mask < (1U << rule.n()); ++mask) {
    const VoterSet n{mask};
    table.push_back(minimal_decisive(rule, n, false) | n);
  }
  return DeltaMap(rule.n(), std::move(table));
}

SetFilter decisive_filter(const ArrovianRule& rule, bool strong) {
  std::uint64_t bitmap = 0;
  for (std::uint32_t mask = 0; mask < (1U << rule.n()); ++mask) {
    if (is_decisive(rule, VoterSet{mask}, VoterSet{}, strong)) {
      bitmap |= std::uint64_t{1} << mask;
    }
  }
  return SetFilter(rule.n(), bitmap);
}

DecisivenessOracle::DecisivenessOracle(const Rule& rule, Domain domain)
    : space_(rule.m(), rule.n(), domain) {
  outcomes_.reserve(space_.size());
  for (std::size_t p = 0; p < space_.size(); ++p) {
    outcomes_.push_back(rule(space_.profile(p)).bits());
  }
}

bool DecisivenessOracle::is_decisive(VoterSet coalition, VoterSet indifferent,
                                     bool strong) const {
  check_disjoint(coalition, indifferent, space_.n());
  const int m = space_.m();
  for (std::size_t p = 0; p < space_.size(); ++p) {
    const Profile pr = space_.profile(p);
    for (Alt a = 0; a < m; ++a) {
      for (Alt b = 0; b < m; ++b) {
        if (a == b) continue;
        const PairSignature sig = signature(pr, a, b);
        const VoterSet support = strong ? sig.weakly_for : sig.strictly_for();
        if (!indifferent.subset_of(sig.indifferent()) || !coalition.subset_of(support)) {
          continue;
        }
        if (!((outcomes_[p] >> (a * m + b)) & 1U)) return false;
      }
    }
  }
  return true;
}

}  // namespace arrovian
