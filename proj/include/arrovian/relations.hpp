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

// Partial preorders on a small set of alternatives.
//
// A relation on m <= 4 alternatives is stored as a row-major bit string:
// bit x*m+y is set iff x is at least as good as y.  The same encoding fixes
// the canonical enumeration order.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace arrovian {

/// Largest alternative count supported by the bit encoding.
inline constexpr int kMaxAlternatives = 4;

/// Alternatives are identified by index; labels a, b, c, ... map to 0, 1, 2, ...
using Alt = int;

/// A permutation of alternatives (or voters), perm[x] = image of x.
using Permutation = std::vector<int>;

enum class PairState {
  StrictPref,     // x > y
  StrictDispref,  // x < y
  Indiff,         // x ~ y (also the diagonal)
  Incomp,         // x || y
};

/// Reflexive, transitive relation; construction validates both properties.
class Preorder {
 public:
  /// Builds from raw bits; throws InputError unless reflexive and transitive.
  static Preorder from_bits(int m, std::uint32_t bits);
  /// Builds from a square boolean table; throws InputError on bad shape or
  /// when the table is not a preorder.
  static Preorder from_table(const std::vector<std::vector<bool>>& rel);
  /// Complete preorder from tiers listed best first; alternatives in one tier
  /// are indifferent.  Every alternative must appear exactly once.
  static Preorder from_tiers(int m, const std::vector<std::vector<Alt>>& tiers);

  /// A x A: every pair indifferent.
  static Preorder full(int m);
  /// The discrete order: only the diagonal.
  static Preorder discrete(int m);

  int m() const { return m_; }
  std::uint32_t bits() const { return bits_; }

  bool weakly(Alt x, Alt y) const { return (bits_ >> (x * m_ + y)) & 1U; }
  bool strictly(Alt x, Alt y) const { return weakly(x, y) && !weakly(y, x); }
  bool indifferent(Alt x, Alt y) const { return weakly(x, y) && weakly(y, x); }
  bool incomparable(Alt x, Alt y) const { return !weakly(x, y) && !weakly(y, x); }
  /// True when no two alternatives are incomparable (a linear preorder).
  bool is_complete() const;

  std::vector<std::vector<bool>> table() const;

  friend bool operator==(const Preorder&, const Preorder&) = default;
  friend auto operator<=>(const Preorder&, const Preorder&) = default;

 private:
  Preorder(int m, std::uint32_t bits) : m_(m), bits_(bits) {}
  friend Preorder unchecked_preorder(int m, std::uint32_t bits);

  int m_ = 0;
  std::uint32_t bits_ = 0;
};

/// For evaluators whose output is transitive by construction.  Debug builds
/// still assert the invariant.
Preorder unchecked_preorder(int m, std::uint32_t bits);

bool is_preorder(const std::vector<std::vector<bool>>& rel);
bool is_preorder_bits(int m, std::uint32_t bits);

PairState pair_state(const Preorder& p, Alt x, Alt y);

/// All preorders on m alternatives (1 <= m <= 4) in ascending bit order;
/// linear_only keeps the complete ones.
std::vector<Preorder> enumerate_preorders(int m, bool linear_only);

Preorder intersect(std::span<const Preorder> ps);

/// rel'[rho x][rho y] = rel[x][y].
Preorder apply_permutation(const Preorder& p, std::span<const int> rho);

bool is_subrelation(const Preorder& p, const Preorder& q);

/// Throws InputError unless perm is a bijection on [0, size).
void check_permutation(std::span<const int> perm, int size);

/// All permutations of [0, k) in lexicographic order.
std::vector<Permutation> all_permutations(int k);

}  // namespace arrovian
