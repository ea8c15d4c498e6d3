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

#include "arrovian/axioms.hpp"

#include <array>
#include <limits>

#include "arrovian/error.hpp"

namespace arrovian {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

constexpr std::array<std::pair<AxiomKind, std::string_view>, 8> kNames{{
    {AxiomKind::Unanimity, "unanimity"},
    {AxiomKind::StrictUnanimity, "strict_unanimity"},
    {AxiomKind::StrongUnanimity, "strong_unanimity"},
    {AxiomKind::Monotonicity, "monotonicity"},
    {AxiomKind::IIA, "iia"},
    {AxiomKind::Neutrality, "neutrality"},
    {AxiomKind::StrongNeutrality, "strong_neutrality"},
    {AxiomKind::Anonymity, "anonymity"},
}};

bool weak_bit(std::uint32_t bits, int m, Alt a, Alt b) { return (bits >> (a * m + b)) & 1U; }

// Signature of (a, b) in profile `index`, as the bucket key X | Y << n.
struct SignatureTable {
  SignatureTable(const ProfileSpace& space) : n(space.n()), m(space.m()) {
    choices.resize(space.size() * static_cast<std::size_t>(n));
    for (std::size_t p = 0; p < space.size(); ++p) {
      space.choices(p, std::span<int>(choices.data() + p * n, static_cast<std::size_t>(n)));
    }
    for (const auto& order : space.orders()) order_bits.push_back(order.bits());
  }

  std::uint32_t key(std::size_t p, Alt a, Alt b) const {
    std::uint32_t x = 0;
    std::uint32_t y = 0;
    for (int i = 0; i < n; ++i) {
      const std::uint32_t bits = order_bits[choices[p * n + i]];
      x |= static_cast<std::uint32_t>(weak_bit(bits, m, a, b)) << i;
      y |= static_cast<std::uint32_t>(weak_bit(bits, m, b, a)) << i;
    }
    return x | (y << n);
  }

  int n;
  int m;
  std::vector<int> choices;
  std::vector<std::uint32_t> order_bits;
};

}  // namespace

std::string_view axiom_name(AxiomKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

AxiomKind parse_axiom(std::string_view name) {
  for (const auto& [k, text] : kNames) {
    if (text == name) return k;
  }
  throw InputError("unknown axiom: " + std::string(name));
}

AxiomSuite::AxiomSuite(const Rule& rule, const ProfileSpace& space)
    : space_(space), n_(space.n()), m_(space.m()) {
  if (rule.n() != n_ || rule.m() != m_) {
    throw InputError("rule and profile space disagree on (n, m)");
  }
  outcomes_.reserve(space_.size());
  for (std::size_t p = 0; p < space_.size(); ++p) {
    outcomes_.push_back(rule(space_.profile(p)).bits());
  }
}

AxiomReport AxiomSuite::check(AxiomKind kind) const {
  switch (kind) {
    case AxiomKind::Unanimity:
    case AxiomKind::StrictUnanimity:
    case AxiomKind::StrongUnanimity:
      return unanimity(kind);
    case AxiomKind::IIA:
      return iia();
    case AxiomKind::Monotonicity:
      return monotonicity();
    case AxiomKind::StrongNeutrality:
      return strong_neutrality();
    case AxiomKind::Neutrality:
      return neutrality();
    case AxiomKind::Anonymity:
      return anonymity();
  }
  throw InputError("unknown axiom kind");
}

std::vector<AxiomReport> AxiomSuite::check(std::span<const AxiomKind> kinds) const {
  std::vector<AxiomReport> out;
  for (AxiomKind k : kinds) out.push_back(check(k));
  return out;
}

AxiomReport AxiomSuite::unanimity(AxiomKind kind) const {
  const SignatureTable sigs(space_);
  const std::uint32_t everyone = VoterSet::all(n_).mask;
  for (std::size_t p = 0; p < space_.size(); ++p) {
    const std::uint32_t out = outcomes_[p];
    for (Alt a = 0; a < m_; ++a) {
      for (Alt b = 0; b < m_; ++b) {
        if (a == b) continue;
        const std::uint32_t key = sigs.key(p, a, b);
        const std::uint32_t x = key & everyone;
        const std::uint32_t y = key >> n_;
        const bool prefers = weak_bit(out, m_, a, b);
        const bool strictly = prefers && !weak_bit(out, m_, b, a);
        bool violated = x == everyone && !prefers;
        if (kind == AxiomKind::StrictUnanimity && (x & ~y) == everyone) {
          violated = violated || !strictly;
        }
        if (kind == AxiomKind::StrongUnanimity && x == everyone && (x & ~y) != 0) {
          violated = violated || !strictly;
        }
        if (violated) {
          AxiomWitness w;
          w.profiles.push_back(space_.profile(p));
          w.a = a;
          w.b = b;
          return {kind, false, w};
        }
      }
    }
  }
  return {kind, true, std::nullopt};
}

AxiomReport AxiomSuite::iia() const {
  const SignatureTable sigs(space_);
  const std::size_t keys = std::size_t{1} << (2 * n_);
  for (Alt a = 0; a < m_; ++a) {
    for (Alt b = 0; b < m_; ++b) {
      if (a == b) continue;
      std::vector<std::size_t> yes(keys, kNone);
      std::vector<std::size_t> no(keys, kNone);
      for (std::size_t p = 0; p < space_.size(); ++p) {
        const std::uint32_t key = sigs.key(p, a, b);
        (weak_bit(outcomes_[p], m_, a, b) ? yes : no)[key] = p;
        if (yes[key] != kNone && no[key] != kNone) {
          AxiomWitness w;
          w.profiles = {space_.profile(yes[key]), space_.profile(no[key])};
          w.a = a;
          w.b = b;
          return {AxiomKind::IIA, false, w};
        }
      }
    }
  }
  return {AxiomKind::IIA, true, std::nullopt};
}

AxiomReport AxiomSuite::monotonicity() const {
  const SignatureTable sigs(space_);
  const std::size_t keys = std::size_t{1} << (2 * n_);
  const std::uint32_t low = VoterSet::all(n_).mask;
  for (Alt a = 0; a < m_; ++a) {
    for (Alt b = 0; b < m_; ++b) {
      if (a == b) continue;
      std::vector<std::size_t> yes(keys, kNone);
      std::vector<std::size_t> no(keys, kNone);
      for (std::size_t p = 0; p < space_.size(); ++p) {
        const std::uint32_t key = sigs.key(p, a, b);
        auto& slot = (weak_bit(outcomes_[p], m_, a, b) ? yes : no)[key];
        if (slot == kNone) slot = p;
      }
      for (std::size_t k = 0; k < keys; ++k) {
        if (yes[k] == kNone) continue;
        const VoterSet x{static_cast<std::uint32_t>(k) & low};
        const VoterSet y{static_cast<std::uint32_t>(k >> n_)};
        for (std::size_t k2 = 0; k2 < keys; ++k2) {
          if (no[k2] == kNone) continue;
          const VoterSet x2{static_cast<std::uint32_t>(k2) & low};
          const VoterSet y2{static_cast<std::uint32_t>(k2 >> n_)};
          if (x.subset_of(x2) && y2.subset_of(y)) {
            AxiomWitness w;
            w.profiles = {space_.profile(yes[k]), space_.profile(no[k2])};
            w.a = a;
            w.b = b;
            return {AxiomKind::Monotonicity, false, w};
          }
        }
      }
    }
  }
  return {AxiomKind::Monotonicity, true, std::nullopt};
}

AxiomReport AxiomSuite::strong_neutrality() const {
  const SignatureTable sigs(space_);
  const std::size_t keys = std::size_t{1} << (2 * n_);
  struct Hit {
    std::size_t profile = kNone;
    Alt a = 0;
    Alt b = 0;
  };
  std::vector<Hit> yes(keys);
  std::vector<Hit> no(keys);
  for (std::size_t p = 0; p < space_.size(); ++p) {
    for (Alt a = 0; a < m_; ++a) {
      for (Alt b = 0; b < m_; ++b) {
        if (a == b) continue;
        const std::uint32_t key = sigs.key(p, a, b);
        auto& slot = (weak_bit(outcomes_[p], m_, a, b) ? yes : no)[key];
        if (slot.profile == kNone) slot = {p, a, b};
        if (yes[key].profile != kNone && no[key].profile != kNone) {
          AxiomWitness w;
          w.profiles = {space_.profile(yes[key].profile), space_.profile(no[key].profile)};
          w.a = yes[key].a;
          w.b = yes[key].b;
          w.a2 = no[key].a;
          w.b2 = no[key].b;
          return {AxiomKind::StrongNeutrality, false, w};
        }
      }
    }
  }
  return {AxiomKind::StrongNeutrality, true, std::nullopt};
}

AxiomReport AxiomSuite::neutrality() const {
  const auto perms = all_permutations(m_);
  const auto& orders = space_.orders();
  std::vector<int> voter(n_);
  std::vector<int> moved(n_);
  for (const auto& rho : perms) {
    std::vector<int> image(orders.size());
    for (std::size_t k = 0; k < orders.size(); ++k) {
      image[k] = space_.order_index(apply_permutation(orders[k], rho));
    }
    for (std::size_t p = 0; p < space_.size(); ++p) {
      space_.choices(p, voter);
      for (int i = 0; i < n_; ++i) moved[i] = image[voter[i]];
      const auto q = space_.index_of(moved);
      if (!q) continue;
      const auto expected = apply_permutation(unchecked_preorder(m_, outcomes_[p]), rho);
      if (outcomes_[*q] != expected.bits()) {
        AxiomWitness w;
        w.profiles.push_back(space_.profile(p));
        w.permutation = rho;
        return {AxiomKind::Neutrality, false, w};
      }
    }
  }
  return {AxiomKind::Neutrality, true, std::nullopt};
}

AxiomReport AxiomSuite::anonymity() const {
  const auto perms = all_permutations(n_);
  std::vector<int> voter(n_);
  std::vector<int> moved(n_);
  for (const auto& sigma : perms) {
    for (std::size_t p = 0; p < space_.size(); ++p) {
      space_.choices(p, voter);
      for (int i = 0; i < n_; ++i) moved[i] = voter[sigma[i]];
      const auto q = space_.index_of(moved);
      if (!q) continue;
      if (outcomes_[*q] != outcomes_[p]) {
        AxiomWitness w;
        w.profiles.push_back(space_.profile(p));
        w.permutation = sigma;
        return {AxiomKind::Anonymity, false, w};
      }
    }
  }
  return {AxiomKind::Anonymity, true, std::nullopt};
}

AxiomReport check_axiom(const Rule& rule, AxiomKind kind, Domain domain) {
  const ProfileSpace space(rule.m(), rule.n(), domain);
  return AxiomSuite(rule, space).check(kind);
}

bool is_arrovian(const Rule& rule, const ProfileSpace& space) {
  const AxiomSuite suite(rule, space);
  return suite.check(AxiomKind::Unanimity).holds && suite.check(AxiomKind::IIA).holds;
}

bool replay_witness(const Rule& rule, const AxiomReport& report) {
  if (report.holds || !report.witness) return false;
  const AxiomWitness& w = *report.witness;
  if (w.profiles.empty()) return false;
  const Profile& p0 = w.profiles[0];
  const Preorder out0 = rule(p0);
  switch (report.kind) {
    case AxiomKind::Unanimity:
    case AxiomKind::StrictUnanimity:
    case AxiomKind::StrongUnanimity: {
      const PairSignature sig = signature(p0, w.a, w.b);
      const VoterSet everyone = VoterSet::all(p0.n());
      if (sig.weakly_for == everyone && !out0.weakly(w.a, w.b)) return true;
      if (report.kind == AxiomKind::StrictUnanimity && sig.strictly_for() == everyone) {
        return !out0.strictly(w.a, w.b);
      }
      if (report.kind == AxiomKind::StrongUnanimity && sig.weakly_for == everyone &&
          !sig.strictly_for().empty()) {
        return !out0.strictly(w.a, w.b);
      }
      return false;
    }
    case AxiomKind::IIA: {
      if (w.profiles.size() < 2) return false;
      const Profile& p1 = w.profiles[1];
      return signature(p0, w.a, w.b) == signature(p1, w.a, w.b) &&
             out0.weakly(w.a, w.b) != rule(p1).weakly(w.a, w.b);
    }
    case AxiomKind::Monotonicity: {
      if (w.profiles.size() < 2) return false;
      const Profile& p1 = w.profiles[1];
      const PairSignature s0 = signature(p0, w.a, w.b);
      const PairSignature s1 = signature(p1, w.a, w.b);
      return s0.weakly_for.subset_of(s1.weakly_for) &&
             s1.weakly_against.subset_of(s0.weakly_against) && out0.weakly(w.a, w.b) &&
             !rule(p1).weakly(w.a, w.b);
    }
    case AxiomKind::StrongNeutrality: {
      if (w.profiles.size() < 2) return false;
      const Profile& p1 = w.profiles[1];
      return signature(p0, w.a, w.b) == signature(p1, w.a2, w.b2) &&
             out0.weakly(w.a, w.b) && !rule(p1).weakly(w.a2, w.b2);
    }
    case AxiomKind::Neutrality: {
      std::vector<Preorder> moved;
      for (const auto& p : p0.orders()) moved.push_back(apply_permutation(p, w.permutation));
      return rule(Profile(p0.m(), moved)) != apply_permutation(out0, w.permutation);
    }
    case AxiomKind::Anonymity: {
      check_permutation(w.permutation, p0.n());
      std::vector<Preorder> moved;
      for (int i = 0; i < p0.n(); ++i) moved.push_back(p0[w.permutation[i]]);
      return rule(Profile(p0.m(), moved)) != out0;
    }
  }
  return false;
}

}  // namespace arrovian
