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

#include "arrovian/classify.hpp"
#include "arrovian/error.hpp"
#include "arrovian/measurable.hpp"
#include "oracles.hpp"

using namespace arrovian;

namespace {

VoterSet set(std::uint32_t mask) { return VoterSet{mask}; }

const std::vector<std::vector<VoterSet>>& partitions_of_three() {
  static const std::vector<std::vector<VoterSet>> all = {
      {set(0b001), set(0b010), set(0b100)},
      {set(0b011), set(0b100)},
      {set(0b101), set(0b010)},
      {set(0b110), set(0b001)},
      {set(0b111)},
  };
  return all;
}

DMap split_map() {
  const Algebra algebra(3, {set(0b011), set(0b100)});
  // Members ascending: {}, {1,2}, {3}, {1,2,3}.
  return DMap(algebra, {set(0b011), set(0b111), set(0b111), set(0b111)});
}

// a >= b iff some measurable N among the indifferent voters has
// G_N \ N inside the strict supporters.
bool dmap_weakly(const DMap& d, const Profile& pr, int a, int b) {
  for (VoterSet tied : d.algebra().members()) {
    const bool all_tied = oracle::all_of(tied.mask, pr.n(), [&](int i) {
      return oracle::indiff(pr, i, a, b);
    });
    if (!all_tied) continue;
    const VoterSet rest = d.generator(tied) - tied;
    if (oracle::all_of(rest.mask, pr.n(), [&](int i) { return oracle::strictly(pr, i, a, b); })) {
      return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("partition algebras") {
  const Algebra a = algebra_from_partition(3, {set(0b011), set(0b100)});
  CHECK(a.members() == std::vector<VoterSet>{set(0), set(0b011), set(0b100), set(0b111)});
  CHECK(a.contains(set(0b100)));
  CHECK_FALSE(a.contains(set(0b001)));
  CHECK(Algebra::power_set(2).members().size() == 4);
  CHECK_THROWS_AS(algebra_from_partition(3, {set(0b011), set(0b110)}), InputError);
  CHECK_THROWS_AS(algebra_from_partition(3, {set(0b011)}), InputError);
}

TEST_CASE("filters inside an algebra") {
  const Algebra a(3, {set(0b011), set(0b100)});
  CHECK(is_filter(SetFilter::principal(3, set(0b011)), a, false));
  CHECK(is_filter(SetFilter::principal(3, set(0b011)), a, true));
  CHECK(is_filter(SetFilter::principal(3, set(0b111)), a, false));
  CHECK_FALSE(is_filter(SetFilter::principal(3, set(0b111)), a, true));
  CHECK_FALSE(is_filter(SetFilter(3, std::vector<VoterSet>{set(0b011)}), a, false));
  CHECK_FALSE(is_filter(SetFilter(3, std::vector<VoterSet>{set(0b011), set(0b100), set(0b111)}),
                        a, false));
  CHECK_THROWS_AS(is_filter(SetFilter::principal(3, set(0b001)), a, false), InputError);

  // On the power set the notion is the usual one.
  const Algebra p = Algebra::power_set(2);
  int filters = 0;
  for (std::uint64_t bitmap = 0; bitmap < 16; ++bitmap) {
    const SetFilter f(2, bitmap);
    CHECK(is_filter(f, p, false) == satisfies_filter_axioms(f));
    filters += is_filter(f, p, false);
  }
  CHECK(filters == 4);
}

TEST_CASE("measurable profiles") {
  const Algebra a(3, {set(0b011), set(0b100)});
  const Preorder x = Preorder::from_tiers(3, {{0}, {1}, {2}});
  const Preorder y = Preorder::from_tiers(3, {{2}, {1}, {0}});
  CHECK(is_measurable(Profile({x, x, y}), a));
  CHECK_FALSE(is_measurable(Profile({x, y, y}), a));
  CHECK(is_measurable(Profile({x, y, y}), Algebra::power_set(3)));
}

TEST_CASE("evaluation of a measurable rule") {
  const DMap d = split_map();
  const Preorder x = Preorder::from_tiers(3, {{0}, {1}, {2}});
  const Preorder y = Preorder::from_tiers(3, {{2}, {1}, {0}});
  // The block {1,2} decides against voter 3.
  CHECK(eval_measurable(d, Profile({x, x, y})) == x);
  CHECK(eval_measurable(d, Profile({y, y, x})) == y);
  // Block {1,2} indifferent: voter 3 alone would need G = {1,2,3}, so all
  // three of them must agree.
  const Preorder full = Preorder::full(3);
  CHECK(eval_measurable(d, Profile({full, full, x})) == x);

  CHECK_THROWS_AS(eval_measurable(d, Profile({x, y, y})), InputError);
  CHECK_THROWS_AS(eval_measurable(d, Profile({x, y})), InputError);
  const DMap broken(d.algebra(), {set(0b111), set(0b011), set(0b111), set(0b111)});
  CHECK_THROWS_AS(eval_measurable(broken, Profile({x, x, y})), ValidationError);

  const ProfileSpace space(3, 3, Domain::Partial, d.algebra().blocks());
  for (std::size_t p = 0; p < space.size(); ++p) {
    const Profile pr = space.profile(p);
    const Preorder out = eval_measurable(d, pr);
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        if (a != b) CHECK(out.weakly(a, b) == dmap_weakly(d, pr, a, b));
      }
    }
  }
}

TEST_CASE("power-set maps are coalition maps") {
  for (const DeltaMap& delta : enumerate_delta_maps(3, true)) {
    const Rule rule = Rule::from_spec(RuleSpec{3, rule::Delta{delta}}, 3);
    const Algebra p = Algebra::power_set(3);
    CHECK(extract_dmap(ArrovianRule::verify(rule), p) == DMap::from_delta(delta));
  }
}

TEST_CASE("classification on every partition of three voters") {
  for (const auto& blocks : partitions_of_three()) {
    const Algebra algebra(3, blocks);
    for (const DeltaMap& delta : enumerate_delta_maps(3, true)) {
      const Rule rule = Rule::from_spec(RuleSpec{3, rule::Delta{delta}}, 3);
      const ArrovianRule verified = ArrovianRule::verify(rule, Domain::Partial, blocks);
      const DMap d = extract_dmap(verified, algebra);
      CHECK(satisfies_monotonicity(d));
      const Rule back = Rule::from_spec(RuleSpec{3, rule::Measurable{d}}, 3);
      const ProfileSpace& space = verified.space();
      for (std::size_t p = 0; p < space.size(); ++p) {
        const Profile pr = space.profile(p);
        CHECK(back(pr) == rule(pr));
        CHECK(eval_measurable(d, pr) == rule(pr));
      }
      const ArrovianRule again = ArrovianRule::verify(back, Domain::Partial, blocks);
      CHECK(extract_dmap(again, algebra) == d);
      // Relative filters of the map are principal filters of the algebra.
      for (VoterSet tied : algebra.members()) {
        CHECK(algebra.contains(d.generator(tied)));
        CHECK(tied.subset_of(d.generator(tied)));
      }
    }
  }
}

TEST_CASE("extraction needs the matching algebra") {
  const Rule rule = Rule::from_spec(RuleSpec{3, rule::Pareto{set(0b111)}}, 3);
  const ArrovianRule on_blocks = ArrovianRule::verify(rule, Domain::Partial, {set(0b011), set(0b100)});
  CHECK_THROWS_AS(extract_dmap(on_blocks, Algebra::power_set(3)), InputError);
  const DMap d = extract_dmap(on_blocks, Algebra(3, {set(0b011), set(0b100)}));
  CHECK(d.generator(set(0)) == set(0b111));
}
