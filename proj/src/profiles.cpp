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

#include "arrovian/profiles.hpp"

#include <string>

#include "arrovian/error.hpp"

namespace arrovian {

VoterSet VoterSet::from_indices(std::span<const int> voters) {
  VoterSet s;
  for (int v : voters) {
    if (v < 0 || v >= kMaxVoters) throw InputError("voter index out of range");
    s.mask |= 1U << v;
  }
  return s;
}

std::vector<int> VoterSet::members() const {
  std::vector<int> out;
  for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest));
  }
  return out;
}

void check_society(int n) {
  if (n < 0 || n > kMaxVoters) {
    throw InputError("society size must be in [0, " + std::to_string(kMaxVoters) +
                     "], got " + std::to_string(n));
  }
}

void check_subset(VoterSet s, int n) {
  if (!s.subset_of(VoterSet::all(n))) {
    throw InputError("voter set is not a subset of {1.." + std::to_string(n) + "}");
  }
}

Profile::Profile(int m, std::vector<Preorder> orders) : m_(m), orders_(std::move(orders)) {
  check_society(n());
  for (const auto& p : orders_) {
    if (p.m() != m_) throw InputError("profile mixes alternative counts");
  }
}

namespace {

int alternatives_of(const std::vector<Preorder>& orders) {
  if (orders.empty()) throw InputError("cannot infer alternatives of an empty profile");
  return orders.front().m();
}

}  // namespace

Profile::Profile(const std::vector<Preorder>& orders) : Profile(alternatives_of(orders), orders) {}

bool Profile::is_linear() const {
  for (const auto& p : orders_) {
    if (!p.is_complete()) return false;
  }
  return true;
}

PairSignature signature(const Profile& pr, Alt a, Alt b) {
  if (a == b) throw InputError("signature needs two distinct alternatives");
  if (a < 0 || b < 0 || a >= pr.m() || b >= pr.m()) {
    throw InputError("alternative index out of range");
  }
  PairSignature sig;
  for (int i = 0; i < pr.n(); ++i) {
    if (pr[i].weakly(a, b)) sig.weakly_for.mask |= 1U << i;
    if (pr[i].weakly(b, a)) sig.weakly_against.mask |= 1U << i;
  }
  return sig;
}

Profile worst_case_profile(int m, int n, Alt a, Alt b, VoterSet indifferent,
                           VoterSet supporters, bool strong) {
  check_society(n);
  if (m < 2) throw InputError("worst-case profile needs at least two alternatives");
  if (a == b || a < 0 || b < 0 || a >= m || b >= m) {
    throw InputError("worst-case profile needs two distinct alternatives");
  }
  if (!indifferent.disjoint(supporters)) {
    throw InputError("indifferent and supporting voters overlap");
  }
  check_subset(indifferent | supporters, n);

  std::vector<std::vector<Alt>> rest;
  for (Alt x = 0; x < m; ++x) {
    if (x != a && x != b) rest.push_back({x});
  }
  auto with_top = [&](std::vector<std::vector<Alt>> top) {
    top.insert(top.end(), rest.begin(), rest.end());
    return Preorder::from_tiers(m, top);
  };
  const Preorder tie = with_top({{a, b}});
  const Preorder for_a = with_top({{a}, {b}});
  const Preorder for_b = with_top({{b}, {a}});

  std::vector<Preorder> orders;
  orders.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (indifferent.contains(i) || (strong && supporters.contains(i))) {
      orders.push_back(tie);
    } else if (supporters.contains(i)) {
      orders.push_back(for_a);
    } else {
      orders.push_back(for_b);
    }
  }
  return Profile(m, std::move(orders));
}

Profile extend_with_indifference(const Profile& pr, VoterSet indifferent, int n) {
  check_society(n);
  check_subset(indifferent, n);
  if (pr.n() != n - indifferent.size()) {
    throw InputError("profile size does not match the remaining electorate");
  }
  std::vector<Preorder> orders;
  orders.reserve(n);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    orders.push_back(indifferent.contains(i) ? Preorder::full(pr.m()) : pr[next++]);
  }
  return Profile(pr.m(), std::move(orders));
}

Profile restrict_electorate(const Profile& pr, VoterSet removed) {
  check_subset(removed, pr.n());
  std::vector<Preorder> orders;
  for (int i = 0; i < pr.n(); ++i) {
    if (!removed.contains(i)) orders.push_back(pr[i]);
  }
  return Profile(pr.m(), std::move(orders));
}

ProfileSpace::ProfileSpace(int m, int n, Domain domain, std::vector<VoterSet> blocks)
    : m_(m), n_(n), domain_(domain), blocks_(std::move(blocks)) {
  check_society(n);
  orders_ = enumerate_preorders(m, domain == Domain::Linear);
  for (int k = 0; k < static_cast<int>(orders_.size()); ++k) {
    order_lookup_.emplace(orders_[k].bits(), k);
  }
  if (blocks_.empty()) {
    for (int i = 0; i < n; ++i) blocks_.push_back(VoterSet::of(1U << i));
  }
  block_of_.assign(n, -1);
  for (int b = 0; b < static_cast<int>(blocks_.size()); ++b) {
    if (blocks_[b].empty()) throw InputError("profile space: empty block");
    for (int v : blocks_[b].members()) {
      if (v >= n || block_of_[v] != -1) {
        throw InputError("profile space: blocks do not partition the voters");
      }
      block_of_[v] = b;
    }
  }
  for (int v = 0; v < n; ++v) {
    if (block_of_[v] == -1) throw InputError("profile space: blocks do not cover the voters");
  }
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (size_ > kProfileGuard / orders_.size()) {
      throw GuardError("profile enumeration exceeds the guard of " +
                       std::to_string(kProfileGuard) + " profiles");
    }
    size_ *= orders_.size();
  }
}

void ProfileSpace::choices(std::size_t index, std::span<int> voter_orders) const {
  const std::size_t base = orders_.size();
  std::vector<int> per_block(blocks_.size());
  for (std::size_t b = blocks_.size(); b-- > 0;) {
    per_block[b] = static_cast<int>(index % base);
    index /= base;
  }
  for (int v = 0; v < n_; ++v) voter_orders[v] = per_block[block_of_[v]];
}

Profile ProfileSpace::profile(std::size_t index) const {
  std::vector<int> idx(n_);
  choices(index, idx);
  std::vector<Preorder> orders;
  orders.reserve(n_);
  for (int v = 0; v < n_; ++v) orders.push_back(orders_[idx[v]]);
  return Profile(m_, std::move(orders));
}

std::optional<std::size_t> ProfileSpace::index_of(std::span<const int> voter_orders) const {
  if (static_cast<int>(voter_orders.size()) != n_) return std::nullopt;
  std::vector<int> per_block(blocks_.size(), -1);
  for (int v = 0; v < n_; ++v) {
    const int k = voter_orders[v];
    if (k < 0 || k >= static_cast<int>(orders_.size())) return std::nullopt;
    int& slot = per_block[block_of_[v]];
    if (slot != -1 && slot != k) return std::nullopt;
    slot = k;
  }
  std::size_t index = 0;
  for (int k : per_block) index = index * orders_.size() + static_cast<std::size_t>(k);
  return index;
}

std::optional<std::size_t> ProfileSpace::index_of(const Profile& pr) const {
  if (pr.n() != n_ || pr.m() != m_) return std::nullopt;
  std::vector<int> idx(n_);
  for (int v = 0; v < n_; ++v) {
    idx[v] = order_index(pr[v]);
    if (idx[v] < 0) return std::nullopt;
  }
  return index_of(idx);
}

int ProfileSpace::order_index(const Preorder& p) const {
  if (p.m() != m_) return -1;
  auto it = order_lookup_.find(p.bits());
  return it == order_lookup_.end() ? -1 : it->second;
}

ProfileSpace enumerate_profiles(int m, int n, bool linear_only) {
  return ProfileSpace(m, n, linear_only ? Domain::Linear : Domain::Partial);
}

}  // namespace arrovian
