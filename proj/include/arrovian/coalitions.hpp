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

// Value types describing coalition structures: chains, coalition maps,
// families/filters of voter sets and partition algebras.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "arrovian/profiles.hpp"

namespace arrovian {

/// Strictly ascending chain J_1 < ... < J_l of non-empty voter sets.
class Chain {
 public:
  Chain() = default;
  /// Throws InputError unless the sets are non-empty and strictly ascending.
  explicit Chain(std::vector<VoterSet> sets);

  const std::vector<VoterSet>& sets() const { return sets_; }
  int length() const { return static_cast<int>(sets_.size()); }
  bool empty() const { return sets_.empty(); }
  /// J_lambda with J_0 = {} and J_lambda = J_l for lambda >= l.
  VoterSet at(int lambda) const;
  /// Every step J_lambda -> J_lambda+1 (lambda < l) adds exactly one voter.
  bool single_steps() const;

  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  std::vector<VoterSet> sets_;
};

/// Total table N -> Delta N over all subsets of {1..n}, indexed by mask.
class DeltaMap {
 public:
  /// Throws InputError if the table is not total or leaves {1..n}.
  DeltaMap(int n, std::vector<VoterSet> table);

  /// Delta N = N for all N (the trivial rule).
  static DeltaMap identity(int n);
  /// Delta N = J | N (the Pareto rule of J).
  static DeltaMap pareto(int n, VoterSet junta);

  int n() const { return n_; }
  VoterSet at(VoterSet subset) const { return table_[subset.mask]; }
  /// delta N = Delta N \ N.
  VoterSet relative(VoterSet subset) const { return table_[subset.mask] - subset; }
  const std::vector<VoterSet>& table() const { return table_; }

  friend bool operator==(const DeltaMap&, const DeltaMap&) = default;
  friend auto operator<=>(const DeltaMap& a, const DeltaMap& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.table_ <=> b.table_;
  }

 private:
  int n_;
  std::vector<VoterSet> table_;
};

/// A family of subsets of {1..n}, stored as a bitmap over subset masks.  The
/// filter axioms are checked at the validation boundary, not on construction.
class SetFilter {
 public:
  SetFilter(int n, std::uint64_t bitmap);
  SetFilter(int n, const std::vector<VoterSet>& members);

  /// All supersets of the generator.
  static SetFilter principal(int n, VoterSet generator);

  int n() const { return n_; }
  std::uint64_t bitmap() const { return bitmap_; }
  bool contains(VoterSet s) const { return (bitmap_ >> s.mask) & 1U; }
  std::vector<VoterSet> members() const;
  /// Intersection of all members when the family is exactly the principal
  /// family it generates; nullopt otherwise.
  std::optional<VoterSet> generator() const;

  friend bool operator==(const SetFilter&, const SetFilter&) = default;

 private:
  int n_;
  std::uint64_t bitmap_;
};

/// Algebra of all unions of the blocks of a partition of {1..n}.
class Algebra {
 public:
  /// Throws InputError unless the blocks partition {1..n}.
  Algebra(int n, std::vector<VoterSet> blocks);

  /// Singleton blocks: the full power set.
  static Algebra power_set(int n);

  int n() const { return n_; }
  const std::vector<VoterSet>& blocks() const { return blocks_; }
  /// Ascending by mask.
  const std::vector<VoterSet>& members() const { return members_; }
  bool contains(VoterSet s) const;

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.n_ == b.n_ && a.members_ == b.members_;
  }

 private:
  int n_;
  std::vector<VoterSet> blocks_;
  std::vector<VoterSet> members_;
};

/// Filter-valued coalition map on a finite algebra.  Every filter is
/// principal here, so D N is stored as its generator G_N; the relative
/// filter d N is then generated by G_N \ N.
class DMap {
 public:
  /// `generators[k]` belongs to `algebra.members()[k]`.  Throws InputError on
  /// size mismatch or generators outside the algebra.
  DMap(Algebra algebra, std::vector<VoterSet> generators);

  const Algebra& algebra() const { return algebra_; }
  int n() const { return algebra_.n(); }
  /// Generator of D N; throws InputError when N is not measurable.
  VoterSet generator(VoterSet subset) const;
  VoterSet relative_generator(VoterSet subset) const { return generator(subset) - subset; }
  const std::vector<VoterSet>& generators() const { return generators_; }

  /// D N = (Delta N) for every N of the power set algebra.
  static DMap from_delta(const DeltaMap& delta);

  friend bool operator==(const DMap&, const DMap&) = default;

 private:
  Algebra algebra_;
  std::vector<VoterSet> generators_;
};

/// Condition (1): N <= Delta N, and M <= N implies Delta M <= Delta N.
bool satisfies_monotonicity(const DeltaMap& delta);

/// The same condition for a filter-valued map: N <= G_N and G_M <= G_N.
bool satisfies_monotonicity(const DMap& dmap);

/// F1 upward closure, F2 contains {1..n}, F3 closed under intersection.
bool satisfies_filter_axioms(const SetFilter& family);

}  // namespace arrovian
