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

#include <doctest.h>

#include <algorithm>
#include <set>

#include "arrovian/axioms.hpp"
#include "arrovian/classify.hpp"
#include "arrovian/error.hpp"
#include "oracles.hpp"

using namespace arrovian;

namespace {

VoterSet set(std::uint32_t mask) { return VoterSet{mask}; }

Rule delta_rule(const DeltaMap& d) { return Rule::from_spec(RuleSpec{d.n(), rule::Delta{d}}, 3); }

ArrovianRule verified(int n, RuleSpec::Variant v, Domain domain = Domain::Partial) {
  return ArrovianRule::verify(Rule::from_spec(RuleSpec{n, std::move(v)}, 3), domain);
}

DeltaMap two_tier() {
  return DeltaMap(3, {set(0b011), set(0b111), set(0b011), set(0b111), set(0b111), set(0b111),
                      set(0b111), set(0b111)});
}

DeltaMap table_from_code(int n, std::uint64_t code) {
  std::vector<VoterSet> table;
  for (int k = 0; k < (1 << n); ++k) {
    table.push_back(set(static_cast<std::uint32_t>(code >> (n * k)) & ((1U << n) - 1U)));
  }
  return DeltaMap(n, table);
}

// Every map satisfying (1), and (2) when asked, by brute force over all
// 2^(n 2^n) tables.
std::vector<DeltaMap> brute_force_maps(int n, bool with_cond2) {
  std::vector<DeltaMap> out;
  const std::uint64_t total = std::uint64_t{1} << (n << n);
  for (std::uint64_t code = 0; code < total; ++code) {
    const DeltaMap d = table_from_code(n, code);
    if (oracle::cond1(d) && (!with_cond2 || oracle::cond2(d))) out.push_back(d);
  }
  std::sort(out.begin(), out.end(), [](const DeltaMap& a, const DeltaMap& b) {
    return a.table() < b.table();
  });
  return out;
}

// Relation between two rules as sets of pairs, profile by profile.
RuleOrder pointwise_order(const Rule& lhs, const Rule& rhs) {
  const ProfileSpace space(3, lhs.n(), Domain::Partial);
  bool sub = true, sup = true;
  for (std::size_t p = 0; p < space.size(); ++p) {
    const Profile pr = space.profile(p);
    const Preorder l = lhs(pr), r = rhs(pr);
    sub = sub && is_subrelation(l, r);
    sup = sup && is_subrelation(r, l);
  }
  if (sub && sup) return RuleOrder::Equal;
  if (sub) return RuleOrder::Subset;
  if (sup) return RuleOrder::Superset;
  return RuleOrder::Incomparable;
}

}  // namespace

TEST_CASE("validation examples") {
  const ValidationReport id = validate_delta(DeltaMap::identity(3));
  CHECK(id.cond1);
  CHECK(id.cond2);
  CHECK(id.violations.empty());
  CHECK(validate_delta(two_tier()).valid());

  const DeltaMap bad(2, {set(0b01), set(0b01), set(0b10), set(0b11)});
  const ValidationReport report = validate_delta(bad);
  CHECK_FALSE(report.cond1);
  REQUIRE_FALSE(report.violations.empty());
  const Violation& v = report.violations.front();
  CHECK(v.condition == Condition::Monotonicity);
  CHECK(v.n == set(0b10));
  CHECK(v.m == set(0));
}

TEST_CASE("validation agrees with the conditions on every n=2 table") {
  for (std::uint64_t code = 0; code < 256; ++code) {
    const DeltaMap d = table_from_code(2, code);
    const ValidationReport r = validate_delta(d);
    CHECK(r.cond1 == oracle::cond1(d));
    CHECK(r.cond2 == oracle::cond2(d));
    if (r.cond1) CHECK(r.cond2 == r.cond2prime);
  }
}

TEST_CASE("(2) and (2') coincide under (1) for n=3") {
  for (const DeltaMap& d : enumerate_delta_maps(3, false)) {
    const ValidationReport r = validate_delta(d);
    CHECK(r.cond1);
    CHECK(r.cond2 == r.cond2prime);
    CHECK(r.cond2 == oracle::cond2(d));
  }
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_delta_maps(0, true).size() == 1);
  CHECK(enumerate_delta_maps(1, true).size() == 2);
  CHECK(enumerate_delta_maps(2, true).size() == 6);
  CHECK_THROWS_AS(enumerate_delta_maps(5, true), InputError);
  CHECK_THROWS_AS(enumerate_delta_maps(-1, true), InputError);
}

TEST_CASE("enumeration matches brute force") {
  for (int n = 1; n <= 3; ++n) {
    for (bool with_cond2 : {false, true}) {
      CAPTURE(n);
      CAPTURE(with_cond2);
      CHECK(enumerate_delta_maps(n, with_cond2) == brute_force_maps(n, with_cond2));
    }
  }
}

TEST_CASE("enumeration regression values") {
  CHECK(enumerate_delta_maps(3, true).size() == 35);
  CHECK(enumerate_delta_maps(3, false).size() == 216);
  CHECK(enumerate_delta_maps(4, true).size() == 596);
}

TEST_CASE("the six rules of two voters") {
  std::set<DeltaMap> expected;
  expected.insert(extract_delta(verified(2, rule::Trivial{})));
  expected.insert(extract_delta(verified(2, rule::LexSeq{{0}})));
  expected.insert(extract_delta(verified(2, rule::LexSeq{{1}})));
  expected.insert(extract_delta(verified(2, rule::LexSeq{{0, 1}})));
  expected.insert(extract_delta(verified(2, rule::LexSeq{{1, 0}})));
  expected.insert(extract_delta(verified(2, rule::Pareto{set(0b11)})));
  const auto maps = enumerate_delta_maps(2, true);
  CHECK(std::set<DeltaMap>(maps.begin(), maps.end()) == expected);
}

TEST_CASE("round trips") {
  CHECK(round_trip(DeltaMap::identity(2)));
  CHECK(round_trip(two_tier()));
  for (const DeltaMap& d : enumerate_delta_maps(2, true)) CHECK(round_trip(d));
  const DeltaMap cond1_only = [] {
    for (const DeltaMap& d : enumerate_delta_maps(2, false)) {
      if (!validate_delta(d).cond2) return d;
    }
    return DeltaMap::identity(2);
  }();
  CHECK_FALSE(validate_delta(cond1_only).cond2);
  CHECK_THROWS_AS(round_trip(cond1_only), ValidationError);
}

TEST_CASE("chains of coalition maps") {
  CHECK(chain_of(DeltaMap::pareto(3, set(0b101))) == Chain({set(0b101)}));
  CHECK(chain_of(two_tier()) == Chain({set(0b011), set(0b111)}));
  const DeltaMap seq = extract_delta(verified(2, rule::LexSeq{{0, 1}}));
  CHECK(chain_of(seq) == Chain({set(0b01), set(0b11)}));
  CHECK(chain_of(DeltaMap::identity(2)).empty());
}

TEST_CASE("closed forms of lexicographic coalition maps") {
  // Hand-computed values for the chain {1,2} < {1,2,3}.
  const Chain c({set(0b011), set(0b111)});
  CHECK(strong_lex_delta(c, 3).relative(set(0b001)) == set(0b110));
  CHECK(lex_delta(c, 3).relative(set(0b001)) == set(0b010));
  CHECK(lex_delta(c, 3).relative(set(0b111)) == set(0));
  for (int n = 1; n <= 3; ++n) {
    for (const auto& masks : oracle::all_chains(n)) {
      const Chain chain = oracle::to_chain(masks);
      CAPTURE(masks);
      const DeltaMap lex = extract_delta(verified(n, rule::Lex{chain}));
      const DeltaMap strong = extract_delta(verified(n, rule::StrongLex{chain}));
      CHECK(lex == lex_delta(chain, n));
      CHECK(strong == strong_lex_delta(chain, n));
      for (const DeltaMap& d : {lex, strong}) {
        CHECK(d.at(set(0)) == chain.at(1));
        for (int lambda = 1; lambda <= chain.length(); ++lambda) {
          CHECK(d.at(chain.at(lambda)) == chain.at(lambda + 1));
        }
        CHECK(chain_of(d) == chain);
      }
    }
  }
}

TEST_CASE("sandwich between lexicographic rules") {
  const SandwichReport pareto = sandwich_check(verified(2, rule::Pareto{set(0b11)}));
  CHECK(pareto.ok());
  CHECK(pareto.lower_equal);
  CHECK(pareto.upper_equal);
  CHECK(pareto.lex_equal);

  const SandwichReport ex = sandwich_check(verified(3, rule::Delta{two_tier()}));
  CHECK(ex.ok());
  CHECK(ex.chain == Chain({set(0b011), set(0b111)}));
  CHECK_FALSE(ex.lower_equal);
  CHECK_FALSE(ex.upper_equal);

  const Chain c({set(0b001), set(0b111)});
  const SandwichReport lex = sandwich_check(verified(3, rule::Lex{c}));
  CHECK(lex.ok());
  CHECK(lex.upper_equal);
  CHECK(lex.lex_equal);
  const SandwichReport wide =
      sandwich_check(verified(3, rule::Lex{Chain({set(0b011), set(0b111)})}));
  CHECK(wide.ok());
  CHECK_FALSE(wide.lex_equal);
  const SandwichReport strong = sandwich_check(verified(3, rule::StrongLex{c}));
  CHECK(strong.ok());
  CHECK(strong.lower_equal);

  for (const DeltaMap& d : enumerate_delta_maps(2, true)) {
    CHECK(sandwich_check(ArrovianRule::verify(delta_rule(d))).ok());
  }
}

TEST_CASE("linear-range classification") {
  CHECK(classify_linear_range(DeltaMap::identity(3)) == std::vector<int>{});
  CHECK_FALSE(classify_linear_range(DeltaMap::pareto(2, set(0b11))).has_value());
  const DeltaMap seq = extract_delta(verified(3, rule::LexSeq{{1, 0, 2}}));
  CHECK(classify_linear_range(seq) == std::vector<int>{1, 0, 2});
  CHECK_THROWS_AS(classify_linear_range(DeltaMap(1, {set(1), set(0)})), ValidationError);
}

TEST_CASE("dictator counts") {
  int complete = 0;
  int strong = 0;
  for (const DeltaMap& d : enumerate_delta_maps(3, true)) {
    const bool linear_range = maps_linear_to_complete(d);
    bool small_steps = true;
    for (VoterSet n = set(0); n.mask < 8; ++n.mask) small_steps &= d.relative(n).size() <= 1;
    CHECK(linear_range == small_steps);
    CHECK(classify_linear_range(d).has_value() == linear_range);
    if (!linear_range) continue;
    ++complete;
    if (check_axiom(delta_rule(d), AxiomKind::StrongUnanimity, Domain::Partial).holds) ++strong;
  }
  // Sequences of distinct voters of length 0..3: 1 + 3 + 6 + 6.
  int sequences = 0;
  for (int len = 0, count = 1; len <= 3; ++len) {
    sequences += count;
    count *= 3 - len;
  }
  CHECK(complete == sequences);
  CHECK(complete == 16);
  CHECK(strong == 6);
}

TEST_CASE("extension from linear profiles") {
  const ArrovianRule dictator = verified(2, rule::LexSeq{{0}}, Domain::Linear);
  const DeltaMap d = extend_from_linear(dictator);
  for (VoterSet n = set(0); n.mask < 4; ++n.mask) CHECK(d.at(n) == (n | set(0b01)));

  const ArrovianRule seq = verified(3, rule::LexSeq{{2, 0}}, Domain::Linear);
  CHECK(extend_from_linear(seq) == extract_delta(verified(3, rule::LexSeq{{2, 0}})));
}

TEST_CASE("rule order through coalition maps") {
  const DeltaMap ex = two_tier();
  CHECK(order_compare(ex, ex) == RuleOrder::Equal);
  CHECK(order_compare(DeltaMap::identity(3), ex) == RuleOrder::Superset);
  CHECK(order_compare(DeltaMap::pareto(2, set(0b01)), DeltaMap::pareto(2, set(0b11))) ==
        RuleOrder::Superset);
  CHECK_THROWS_AS(order_compare(DeltaMap::identity(2), DeltaMap::identity(3)), InputError);

  const auto maps = enumerate_delta_maps(2, true);
  for (const DeltaMap& lhs : maps) {
    for (const DeltaMap& rhs : maps) {
      CHECK(order_compare(lhs, rhs) == pointwise_order(delta_rule(lhs), delta_rule(rhs)));
    }
  }
}

TEST_CASE("equivalent forms of the coalition map rule") {
  for (int n = 1; n <= 3; ++n) {
    const std::uint32_t full = (1U << n) - 1U;
    bool maximal_differs = false;
    for (const DeltaMap& d : enumerate_delta_maps(n, false)) {
      const bool cond2 = validate_delta(d).cond2;
      for (std::uint32_t x = 0; x <= full; ++x) {
        for (std::uint32_t y = 0; y <= full; ++y) {
          const PairSignature sig{set(x), set(y)};
          const bool base = delta_prefers(d, sig, DeltaForm::Indifferent);
          CHECK(base == delta_prefers(d, sig));
          CHECK(base == delta_prefers(d, sig, DeltaForm::Weak));
          const bool maximal = delta_prefers(d, sig, DeltaForm::Maximal);
          if (cond2) CHECK(base == maximal);
          maximal_differs |= base != maximal;
        }
      }
    }
    if (n >= 2) CHECK(maximal_differs);
  }
}

TEST_CASE("bijection for small societies") {
  for (int n = 1; n <= 2; ++n) {
    const auto maps = enumerate_delta_maps(n, true);
    const ProfileSpace space(3, n, Domain::Partial);
    std::set<std::vector<std::uint32_t>> images;
    for (const DeltaMap& d : maps) {
      const Rule rule = delta_rule(d);
      std::vector<std::uint32_t> outcomes;
      for (std::size_t p = 0; p < space.size(); ++p) outcomes.push_back(rule(space.profile(p)).bits());
      images.insert(outcomes);
      CHECK(extract_delta(ArrovianRule::verify(rule)) == d);
    }
    CHECK(images.size() == maps.size());
  }
}

TEST_CASE("linear-domain extraction agrees with the partial domain") {
  for (const DeltaMap& d : enumerate_delta_maps(3, true)) {
    const Rule rule = delta_rule(d);
    CHECK(extract_delta(ArrovianRule::verify(rule, Domain::Linear)) == d);
    CHECK(extend_from_linear(ArrovianRule::verify(rule, Domain::Linear)) == d);
  }
}
