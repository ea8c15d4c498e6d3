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

#include "arrovian/coalitions.hpp"

#include <algorithm>

#include "arrovian/error.hpp"

namespace arrovian {

Chain::Chain(std::vector<VoterSet> sets) : sets_(std::move(sets)) {
  for (std::size_t k = 0; k < sets_.size(); ++k) {
    if (sets_[k].empty()) throw InputError("chain members must be non-empty");
    if (k > 0 && (!sets_[k - 1].subset_of(sets_[k]) || sets_[k - 1] == sets_[k])) {
      throw InputError("chain must be strictly ascending");
    }
  }
}

VoterSet Chain::at(int lambda) const {
  if (lambda <= 0 || sets_.empty()) return {};
  if (lambda >= length()) return sets_.back();
  return sets_[lambda - 1];
}

bool Chain::single_steps() const {
  for (int lambda = 0; lambda < length(); ++lambda) {
    if ((at(lambda + 1) - at(lambda)).size() != 1) return false;
  }
  return true;
}

DeltaMap::DeltaMap(int n, std::vector<VoterSet> table) : n_(n), table_(std::move(table)) {
  check_society(n);
  if (table_.size() != (std::size_t{1} << n)) {
    throw InputError("coalition map must list all 2^n subsets");
  }
  for (VoterSet s : table_) check_subset(s, n);
}

DeltaMap DeltaMap::identity(int n) {
  check_society(n);
  std::vector<VoterSet> table;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) table.push_back(VoterSet{mask});
  return DeltaMap(n, std::move(table));
}

DeltaMap DeltaMap::pareto(int n, VoterSet junta) {
  check_society(n);
  check_subset(junta, n);
  std::vector<VoterSet> table;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) table.push_back(VoterSet{mask} | junta);
  return DeltaMap(n, std::move(table));
}

SetFilter::SetFilter(int n, std::uint64_t bitmap) : n_(n), bitmap_(bitmap) {
  check_society(n);
  const unsigned subsets = 1U << n;
  if (subsets < 64 && (bitmap >> subsets) != 0) {
    throw InputError("family contains sets outside {1..n}");
  }
}

SetFilter::SetFilter(int n, const std::vector<VoterSet>& members) : n_(n), bitmap_(0) {
  check_society(n);
  for (VoterSet s : members) {
    check_subset(s, n);
    bitmap_ |= std::uint64_t{1} << s.mask;
  }
}

SetFilter SetFilter::principal(int n, VoterSet generator) {
  check_society(n);
  check_subset(generator, n);
  std::uint64_t bitmap = 0;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (generator.subset_of(VoterSet{mask})) bitmap |= std::uint64_t{1} << mask;
  }
  return SetFilter(n, bitmap);
}

std::vector<VoterSet> SetFilter::members() const {
  std::vector<VoterSet> out;
  for (std::uint32_t mask = 0; mask < (1U << n_); ++mask) {
    if (contains(VoterSet{mask})) out.push_back(VoterSet{mask});
  }
  return out;
}

std::optional<VoterSet> SetFilter::generator() const {
  if (bitmap_ == 0) return std::nullopt;
  VoterSet meet = VoterSet::all(n_);
  for (VoterSet s : members()) meet = meet & s;
  if (principal(n_, meet).bitmap() != bitmap_) return std::nullopt;
  return meet;
}

Algebra::Algebra(int n, std::vector<VoterSet> blocks) : n_(n), blocks_(std::move(blocks)) {
  check_society(n);
  VoterSet covered;
  for (VoterSet b : blocks_) {
    if (b.empty()) throw InputError("partition blocks must be non-empty");
    check_subset(b, n);
    if (!covered.disjoint(b)) throw InputError("partition blocks overlap");
    covered = covered | b;
  }
  if (covered != VoterSet::all(n)) throw InputError("partition blocks do not cover {1..n}");
  std::ranges::sort(blocks_);
  const auto k = static_cast<std::uint32_t>(blocks_.size());
  for (std::uint32_t pick = 0; pick < (1U << k); ++pick) {
    VoterSet u;
    for (std::uint32_t b = 0; b < k; ++b) {
      if ((pick >> b) & 1U) u = u | blocks_[b];
    }
    members_.push_back(u);
  }
  std::ranges::sort(members_);
}

Algebra Algebra::power_set(int n) {
  check_society(n);
  std::vector<VoterSet> blocks;
  for (int i = 0; i < n; ++i) blocks.push_back(VoterSet{1U << i});
  return Algebra(n, std::move(blocks));
}

bool Algebra::contains(VoterSet s) const {
  return std::ranges::binary_search(members_, s);
}

DMap::DMap(Algebra algebra, std::vector<VoterSet> generators)
    : algebra_(std::move(algebra)), generators_(std::move(generators)) {
  if (generators_.size() != algebra_.members().size()) {
    throw InputError("coalition map must list one generator per measurable set");
  }
  for (VoterSet g : generators_) {
    if (!algebra_.contains(g)) throw InputError("filter generator is not measurable");
  }
}

VoterSet DMap::generator(VoterSet subset) const {
  const auto& members = algebra_.members();
  auto it = std::ranges::lower_bound(members, subset);
  if (it == members.end() || *it != subset) {
    throw InputError("voter set is not measurable");
  }
  return generators_[static_cast<std::size_t>(it - members.begin())];
}

DMap DMap::from_delta(const DeltaMap& delta) {
  Algebra sigma = Algebra::power_set(delta.n());
  std::vector<VoterSet> gens;
  for (VoterSet s : sigma.members()) gens.push_back(delta.at(s));
  return DMap(std::move(sigma), std::move(gens));
}

bool satisfies_monotonicity(const DeltaMap& delta) {
  const std::uint32_t subsets = 1U << delta.n();
  for (std::uint32_t n = 0; n < subsets; ++n) {
    const VoterSet big{n};
    if (!big.subset_of(delta.at(big))) return false;
    // Immediate subsets suffice: inclusion of images is transitive.
    for (std::uint32_t rest = n; rest != 0; rest &= rest - 1) {
      const VoterSet small{n & ~(rest & -rest)};
      if (!delta.at(small).subset_of(delta.at(big))) return false;
    }
  }
  return true;
}

bool satisfies_monotonicity(const DMap& dmap) {
  const auto& members = dmap.algebra().members();
  for (VoterSet big : members) {
    if (!big.subset_of(dmap.generator(big))) return false;
    for (VoterSet small : members) {
      if (small.subset_of(big) && !dmap.generator(small).subset_of(dmap.generator(big))) {
        return false;
      }
    }
  }
  return true;
}

bool satisfies_filter_axioms(const SetFilter& family) {
  const int n = family.n();
  if (!family.contains(VoterSet::all(n))) return false;
  const auto members = family.members();
  for (VoterSet k : members) {
    for (std::uint32_t j = 0; j < (1U << n); ++j) {
      if (k.subset_of(VoterSet{j}) && !family.contains(VoterSet{j})) return false;
    }
    for (VoterSet j : members) {
      if (!family.contains(k & j)) return false;
    }
  }
  return true;
}

}  // namespace arrovian
