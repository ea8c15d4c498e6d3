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

// Voter sets, preference profiles, pairwise signatures and the exhaustive
// profile spaces every checker iterates over.

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "arrovian/relations.hpp"

namespace arrovian {

/// Largest society supported by the subset tables.
inline constexpr int kMaxVoters = 6;

/// Exhaustive enumerations refuse to visit more profiles than this.
inline constexpr std::uint64_t kProfileGuard = 1'000'000;

/// A subset of voters {1..n}; voter i is bit i-1.  The society size is
/// carried by the surrounding object (profile, coalition map, rule).
struct VoterSet {
  std::uint32_t mask = 0;

  static constexpr VoterSet of(std::uint32_t m) { return VoterSet{m}; }
  static constexpr VoterSet all(int n) { return VoterSet{(1U << n) - 1U}; }
  /// From 0-based voter indices.
  static VoterSet from_indices(std::span<const int> voters);

  constexpr bool empty() const { return mask == 0; }
  constexpr bool contains(int voter) const { return (mask >> voter) & 1U; }
  constexpr bool subset_of(VoterSet other) const { return (mask & ~other.mask) == 0; }
  constexpr bool disjoint(VoterSet other) const { return (mask & other.mask) == 0; }
  constexpr int size() const { return std::popcount(mask); }
  /// 0-based member indices, ascending.
  std::vector<int> members() const;

  constexpr VoterSet operator|(VoterSet o) const { return {mask | o.mask}; }
  constexpr VoterSet operator&(VoterSet o) const { return {mask & o.mask}; }
  constexpr VoterSet operator-(VoterSet o) const { return {mask & ~o.mask}; }
  friend constexpr bool operator==(VoterSet, VoterSet) = default;
  friend constexpr auto operator<=>(VoterSet, VoterSet) = default;
};

/// Throws InputError unless 0 <= n <= kMaxVoters.
void check_society(int n);
/// Throws InputError unless s is a subset of {1..n}.
void check_subset(VoterSet s, int n);

/// One preorder per voter, all over the same alternatives.
class Profile {
 public:
  Profile(int m, std::vector<Preorder> orders);
  explicit Profile(const std::vector<Preorder>& orders);

  int n() const { return static_cast<int>(orders_.size()); }
  int m() const { return m_; }
  const Preorder& operator[](int voter) const { return orders_[voter]; }
  const std::vector<Preorder>& orders() const { return orders_; }
  bool is_linear() const;

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  int m_;
  std::vector<Preorder> orders_;
};

/// weakly_for = {i : a >=_i b}, weakly_against = {i : b >=_i a}.
struct PairSignature {
  VoterSet weakly_for;
  VoterSet weakly_against;

  VoterSet indifferent() const { return weakly_for & weakly_against; }
  VoterSet strictly_for() const { return weakly_for - weakly_against; }
  VoterSet strictly_against() const { return weakly_against - weakly_for; }

  friend constexpr bool operator==(PairSignature, PairSignature) = default;
};

PairSignature signature(const Profile& pr, Alt a, Alt b);

/// Linear profile where N holds a ~ b, K holds a > b (a ~ b when strong),
/// everyone else a < b; remaining alternatives follow in index order below
/// both a and b.
Profile worst_case_profile(int m, int n, Alt a, Alt b, VoterSet indifferent,
                           VoterSet supporters, bool strong);

/// Inserts A x A for every voter of `indifferent`; `pr` lists the remaining
/// voters of {1..n} in index order.
Profile extend_with_indifference(const Profile& pr, VoterSet indifferent, int n);

/// Inverse of extend_with_indifference: drops the voters of `removed`.
Profile restrict_electorate(const Profile& pr, VoterSet removed);

enum class Domain { Partial, Linear };

/// Exhaustive, indexable enumeration of profiles.  When blocks are given,
/// voters in one block share their preorder (the measurable profiles of a
/// partition algebra); otherwise every voter is its own block.
class ProfileSpace {
 public:
  ProfileSpace(int m, int n, Domain domain, std::vector<VoterSet> blocks = {});

  int m() const { return m_; }
  int n() const { return n_; }
  Domain domain() const { return domain_; }
  std::size_t size() const { return size_; }
  const std::vector<Preorder>& orders() const { return orders_; }
  const std::vector<VoterSet>& blocks() const { return blocks_; }

  Profile profile(std::size_t index) const;
  /// Preorder index (into orders()) of every voter of profile `index`.
  void choices(std::size_t index, std::span<int> voter_orders) const;
  /// Position of the profile whose voters hold the given preorder indices, if
  /// it belongs to this space.
  std::optional<std::size_t> index_of(std::span<const int> voter_orders) const;
  std::optional<std::size_t> index_of(const Profile& pr) const;
  /// Index into orders(), or -1.
  int order_index(const Preorder& p) const;

 private:
  int m_;
  int n_;
  Domain domain_;
  std::vector<Preorder> orders_;
  std::vector<VoterSet> blocks_;
  std::vector<int> block_of_;
  std::unordered_map<std::uint32_t, int> order_lookup_;
  std::size_t size_ = 1;
};

/// All n-tuples over enumerate_preorders(m, linear), deterministic order.
ProfileSpace enumerate_profiles(int m, int n, bool linear_only);

}  // namespace arrovian
