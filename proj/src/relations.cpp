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

#include "arrovian/relations.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

#include "arrovian/error.hpp"

namespace arrovian {

namespace {

void check_m(int m) {
  if (m < 1 || m > kMaxAlternatives) {
    throw InputError("alternative count must be in [1, " +
                     std::to_string(kMaxAlternatives) + "], got " +
                     std::to_string(m));
  }
}

bool bit(std::uint32_t bits, int m, int x, int y) {
  return (bits >> (x * m + y)) & 1U;
}

}  // namespace

bool is_preorder_bits(int m, std::uint32_t bits) {
  for (int x = 0; x < m; ++x) {
    if (!bit(bits, m, x, x)) return false;
  }
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      if (!bit(bits, m, x, y)) continue;
      for (int z = 0; z < m; ++z) {
        if (bit(bits, m, y, z) && !bit(bits, m, x, z)) return false;
      }
    }
  }
  return true;
}

bool is_preorder(const std::vector<std::vector<bool>>& rel) {
  const auto m = static_cast<int>(rel.size());
  if (m < 1) throw InputError("relation table is empty");
  for (const auto& row : rel) {
    if (static_cast<int>(row.size()) != m) {
      throw InputError("relation table is not square");
    }
  }
  if (m > kMaxAlternatives) check_m(m);
  std::uint32_t bits = 0;
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      if (rel[x][y]) bits |= 1U << (x * m + y);
    }
  }
  return is_preorder_bits(m, bits);
}

Preorder unchecked_preorder(int m, std::uint32_t bits) {
  assert(is_preorder_bits(m, bits));
  return Preorder(m, bits);
}

Preorder Preorder::from_bits(int m, std::uint32_t bits) {
  check_m(m);
  if (m * m < 32 && (bits >> (m * m)) != 0) {
    throw InputError("relation bits exceed m*m");
  }
  if (!is_preorder_bits(m, bits)) {
    throw InputError("relation is not a partial preorder");
  }
  return Preorder(m, bits);
}

Preorder Preorder::from_table(const std::vector<std::vector<bool>>& rel) {
  if (!is_preorder(rel)) throw InputError("relation is not a partial preorder");
  const auto m = static_cast<int>(rel.size());
  std::uint32_t bits = 0;
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      if (rel[x][y]) bits |= 1U << (x * m + y);
    }
  }
  return Preorder(m, bits);
}

Preorder Preorder::from_tiers(int m, const std::vector<std::vector<Alt>>& tiers) {
  check_m(m);
  std::vector<int> rank(m, -1);
  for (int t = 0; t < static_cast<int>(tiers.size()); ++t) {
    for (Alt x : tiers[t]) {
      if (x < 0 || x >= m || rank[x] != -1) {
        throw InputError("tiers must list each alternative exactly once");
      }
      rank[x] = t;
    }
  }
  if (std::ranges::count(rank, -1) != 0) {
    throw InputError("tiers must list each alternative exactly once");
  }
  std::uint32_t bits = 0;
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      if (rank[x] <= rank[y]) bits |= 1U << (x * m + y);
    }
  }
  return Preorder(m, bits);
}

Preorder Preorder::full(int m) {
  check_m(m);
  return Preorder(m, m * m == 32 ? ~0U : (1U << (m * m)) - 1U);
}

Preorder Preorder::discrete(int m) {
  check_m(m);
  std::uint32_t bits = 0;
  for (int x = 0; x < m; ++x) bits |= 1U << (x * m + x);
  return Preorder(m, bits);
}

bool Preorder::is_complete() const {
  for (int x = 0; x < m_; ++x) {
    for (int y = x + 1; y < m_; ++y) {
      if (incomparable(x, y)) return false;
    }
  }
  return true;
}

std::vector<std::vector<bool>> Preorder::table() const {
  std::vector<std::vector<bool>> rel(m_, std::vector<bool>(m_));
  for (int x = 0; x < m_; ++x) {
    for (int y = 0; y < m_; ++y) rel[x][y] = weakly(x, y);
  }
  return rel;
}

PairState pair_state(const Preorder& p, Alt x, Alt y) {
  if (x < 0 || y < 0 || x >= p.m() || y >= p.m()) {
    throw InputError("alternative index out of range");
  }
  const bool xy = p.weakly(x, y);
  const bool yx = p.weakly(y, x);
  if (xy && yx) return PairState::Indiff;
  if (xy) return PairState::StrictPref;
  if (yx) return PairState::StrictDispref;
  return PairState::Incomp;
}

std::vector<Preorder> enumerate_preorders(int m, bool linear_only) {
  check_m(m);
  std::vector<Preorder> out;
  const std::uint64_t limit = std::uint64_t{1} << (m * m);
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    const auto b = static_cast<std::uint32_t>(bits);
    if (!is_preorder_bits(m, b)) continue;
    Preorder p = unchecked_preorder(m, b);
    if (linear_only && !p.is_complete()) continue;
    out.push_back(p);
  }
  return out;
}

Preorder intersect(std::span<const Preorder> ps) {
  if (ps.empty()) throw InputError("intersect needs at least one preorder");
  const int m = ps.front().m();
  std::uint32_t bits = ps.front().bits();
  for (const auto& p : ps) {
    if (p.m() != m) throw InputError("intersect: mixed alternative counts");
    bits &= p.bits();
  }
  return unchecked_preorder(m, bits);
}

void check_permutation(std::span<const int> perm, int size) {
  if (static_cast<int>(perm.size()) != size) {
    throw InputError("permutation has wrong length");
  }
  std::vector<bool> seen(size, false);
  for (int v : perm) {
    if (v < 0 || v >= size || seen[v]) {
      throw InputError("permutation is not a bijection");
    }
    seen[v] = true;
  }
}

Preorder apply_permutation(const Preorder& p, std::span<const int> rho) {
  const int m = p.m();
  check_permutation(rho, m);
  std::uint32_t bits = 0;
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      if (p.weakly(x, y)) bits |= 1U << (rho[x] * m + rho[y]);
    }
  }
  return unchecked_preorder(m, bits);
}

bool is_subrelation(const Preorder& p, const Preorder& q) {
  if (p.m() != q.m()) throw InputError("is_subrelation: mixed alternative counts");
  return (p.bits() & ~q.bits()) == 0;
}

std::vector<Permutation> all_permutations(int k) {
  Permutation perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(perm);
  } while (std::ranges::next_permutation(perm).found);
  return out;
}

}  // namespace arrovian
