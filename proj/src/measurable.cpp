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


#include "arrovian/measurable.hpp"

#include "arrovian/error.hpp"
#include "arrovian/rules.hpp"

namespace arrovian {

Algebra algebra_from_partition(int n, std::vector<VoterSet> blocks) {
  return Algebra(n, std::move(blocks));
}

bool is_filter(const SetFilter& family, const Algebra& algebra, bool ultra) {
  if (family.n() != algebra.n()) throw InputError("family and algebra differ in n");
  const auto members = family.members();
  for (VoterSet k : members) {
    if (!algebra.contains(k)) throw InputError("family member outside the algebra");
  }
  const VoterSet all = VoterSet::all(algebra.n());
  if (!family.contains(all)) return false;
  for (VoterSet k : members) {
    for (VoterSet l : algebra.members()) {
      if (k.subset_of(l) && !family.contains(l)) return false;
    }
    for (VoterSet l : members) {
      if (!family.contains(k & l)) return false;
    }
  }
  if (!ultra) return true;
  if (family.contains(VoterSet{})) return false;
  for (VoterSet k : algebra.members()) {
    if (!family.contains(k) && !family.contains(all - k)) return false;
  }
  return true;
}

bool is_measurable(const Profile& pr, const Algebra& algebra) {
  for (Alt a = 0; a < pr.m(); ++a) {
    for (Alt b = 0; b < pr.m(); ++b) {
      if (a == b) continue;
      const PairSignature sig = signature(pr, a, b);
      if (!algebra.contains(sig.weakly_for) || !algebra.contains(sig.weakly_against)) {
        return false;
      }
    }
  }
  return true;
}

Preorder eval_measurable(const DMap& dmap, const Profile& pr) {
  if (pr.n() != dmap.n()) throw InputError("profile size does not match the map");
  if (!satisfies_monotonicity(dmap)) {
    throw ValidationError("coalition map violates condition (1)");
  }
  if (!is_measurable(pr, dmap.algebra())) throw InputError("profile is not measurable");
  return assemble(pr, [&](PairSignature sig) { return dmap_prefers(dmap, sig); });
}

DMap extract_dmap(const ArrovianRule& rule, const Algebra& algebra) {
  if (algebra.n() != rule.n()) throw InputError("algebra and rule differ in n");
  if (Algebra(rule.n(), rule.space().blocks()) != algebra) {
    throw InputError("rule was not verified on this algebra");
  }
  std::vector<VoterSet> generators;
  for (VoterSet tied : algebra.members()) {
    VoterSet meet = VoterSet::all(rule.n()) - tied;
    for (VoterSet k : algebra.members()) {
      if (k.disjoint(tied) && is_decisive(rule, k, tied, false)) meet = meet & k;
    }
    if (!is_decisive(rule, meet, tied, false)) {
      throw NotArrovianError("intersection of decisive coalitions is not decisive");
    }
    generators.push_back(meet | tied);
  }
  return DMap(algebra, std::move(generators));
}

}  // namespace arrovian
