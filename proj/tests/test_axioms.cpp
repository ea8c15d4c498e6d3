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

#include <functional>

#include "arrovian/axioms.hpp"
#include "arrovian/error.hpp"
#include "arrovian/format.hpp"
#include "oracles.hpp"

using namespace arrovian;

namespace {

VoterSet set(std::uint32_t mask) { return VoterSet{mask}; }

Rule spec_rule(int n, RuleSpec::Variant v) { return Rule::from_spec(RuleSpec{n, std::move(v)}, 3); }

// Rules that break one axiom or another, for the meta-tests.
std::vector<Rule> odd_rules(int n) {
  std::vector<Rule> rules;
  rules.emplace_back(n, 3, [](const Profile&) { return Preorder::from_tiers(3, {{0}, {1}, {2}}); },
                     "constant");
  rules.emplace_back(n, 3, [](const Profile&) { return Preorder::discrete(3); }, "discrete");
  rules.emplace_back(
      n, 3,
      [](const Profile& pr) {
        // Voter 1's order turned upside down.
        std::vector<std::vector<bool>> t = pr[0].table();
        for (int x = 0; x < 3; ++x)
          for (int y = x + 1; y < 3; ++y) std::swap(t[x][y], t[y][x]);
        return Preorder::from_table(t);
      },
      "inverted");
  rules.emplace_back(
      n, 3,
      [n](const Profile& pr) {
        // Pareto of everyone, or of voter 1 alone when voter 2 is indifferent
        // between everything.
        const VoterSet junta = n > 1 && pr[1] == Preorder::full(3) ? set(1) : VoterSet::all(n);
        return eval_pareto(junta, pr);
      },
      "switching");
  rules.emplace_back(
      n, 3,
      [](const Profile& pr) {
        // Ranks by the number of alternatives each voter puts weakly below.
        std::vector<int> score(3);
        for (int i = 0; i < pr.n(); ++i)
          for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y) score[x] += pr[i].weakly(x, y);
        std::vector<std::vector<bool>> t(3, std::vector<bool>(3));
        for (int x = 0; x < 3; ++x)
          for (int y = 0; y < 3; ++y) t[x][y] = score[x] >= score[y];
        return Preorder::from_table(t);
      },
      "score");
  return rules;
}

std::vector<Rule> arrovian_rules(int n) {
  std::vector<Rule> rules;
  rules.push_back(spec_rule(n, rule::Trivial{}));
  rules.push_back(spec_rule(n, rule::Pareto{VoterSet::all(n)}));
  rules.push_back(spec_rule(n, rule::Pareto{set(1)}));
  const Chain chain = n == 1 ? Chain({set(1)}) : Chain({set(1), VoterSet::all(n)});
  rules.push_back(spec_rule(n, rule::Lex{chain}));
  rules.push_back(spec_rule(n, rule::StrongLex{chain}));
  rules.push_back(spec_rule(n, rule::LexSeq{{n - 1}}));
  return rules;
}

// Signatures of every profile and ordered pair, straight from the orders.
struct NaiveSignatures {
  explicit NaiveSignatures(const ProfileSpace& space) {
    for (std::size_t p = 0; p < space.size(); ++p) {
      const Profile pr = space.profile(p);
      std::vector<std::pair<std::uint32_t, std::uint32_t>> row;
      for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
          std::uint32_t x = 0, y = 0;
          for (int i = 0; i < pr.n(); ++i) {
            x |= std::uint32_t{pr[i].weakly(a, b)} << i;
            y |= std::uint32_t{pr[i].weakly(b, a)} << i;
          }
          row.emplace_back(x, y);
        }
      }
      sigs.push_back(row);
    }
  }
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> sigs;
};

struct NaiveVerdicts {
  bool iia = true;
  bool monotonicity = true;
  bool strong_neutrality = true;
};

// All profile pairs, no buckets.
NaiveVerdicts naive_check(const Rule& rule, const ProfileSpace& space) {
  const NaiveSignatures sig(space);
  std::vector<Preorder> out;
  for (std::size_t p = 0; p < space.size(); ++p) out.push_back(rule(space.profile(p)));
  NaiveVerdicts v;
  for (std::size_t p = 0; p < space.size(); ++p) {
    for (std::size_t q = 0; q < space.size(); ++q) {
      for (int ab = 0; ab < 9; ++ab) {
        const int a = ab / 3, b = ab % 3;
        if (a == b) continue;
        const auto [x, y] = sig.sigs[p][ab];
        const auto [x2, y2] = sig.sigs[q][ab];
        if (x == x2 && y == y2 && out[p].weakly(a, b) != out[q].weakly(a, b)) v.iia = false;
        if ((x & ~x2) == 0 && (y2 & ~y) == 0 && out[p].weakly(a, b) && !out[q].weakly(a, b)) {
          v.monotonicity = false;
        }
        for (int cd = 0; cd < 9; ++cd) {
          const int c = cd / 3, d = cd % 3;
          if (c == d) continue;
          if (sig.sigs[q][cd] == sig.sigs[p][ab] && out[p].weakly(a, b) != out[q].weakly(c, d)) {
            v.strong_neutrality = false;
          }
        }
      }
    }
  }
  return v;
}

}  // namespace

TEST_CASE("axiom names round trip") {
  for (AxiomKind kind : kAllAxioms) CHECK(parse_axiom(axiom_name(kind)) == kind);
  CHECK_THROWS_AS(parse_axiom("pareto"), InputError);
}

TEST_CASE("the trivial rule is unanimous but not strictly unanimous") {
  const Rule trivial = spec_rule(2, rule::Trivial{});
  CHECK(check_axiom(trivial, AxiomKind::Unanimity, Domain::Partial).holds);
  const AxiomReport strict = check_axiom(trivial, AxiomKind::StrictUnanimity, Domain::Partial);
  REQUIRE_FALSE(strict.holds);
  REQUIRE(strict.witness.has_value());
  const Profile& pr = strict.witness->profiles.at(0);
  const Alt a = strict.witness->a, b = strict.witness->b;
  for (int i = 0; i < pr.n(); ++i) CHECK(pr[i].strictly(a, b));
  CHECK(trivial(pr).indifferent(a, b));
  CHECK(replay_witness(trivial, strict));
}

TEST_CASE("anonymity") {
  CHECK(check_axiom(spec_rule(2, rule::Pareto{set(0b11)}), AxiomKind::Anonymity, Domain::Partial)
            .holds);
  CHECK(check_axiom(spec_rule(2, rule::Trivial{}), AxiomKind::Anonymity, Domain::Partial).holds);
  const Rule dictators = spec_rule(2, rule::LexSeq{{0, 1}});
  const AxiomReport report = check_axiom(dictators, AxiomKind::Anonymity, Domain::Linear);
  CHECK_FALSE(report.holds);
  CHECK(replay_witness(dictators, report));
}

TEST_CASE("bucket checks agree with all-pairs checks") {
  for (int n = 1; n <= 2; ++n) {
    const ProfileSpace space(3, n, Domain::Partial);
    std::vector<Rule> rules = arrovian_rules(n);
    for (Rule& r : odd_rules(n)) rules.push_back(std::move(r));
    for (const Rule& rule : rules) {
      CAPTURE(rule.name());
      CAPTURE(n);
      const AxiomSuite suite(rule, space);
      const NaiveVerdicts naive = naive_check(rule, space);
      CHECK(suite.check(AxiomKind::IIA).holds == naive.iia);
      CHECK(suite.check(AxiomKind::Monotonicity).holds == naive.monotonicity);
      CHECK(suite.check(AxiomKind::StrongNeutrality).holds == naive.strong_neutrality);
    }
  }
}

TEST_CASE("unanimity variants agree with their definitions") {
  const int n = 2;
  const ProfileSpace space(3, n, Domain::Partial);
  std::vector<Rule> rules = arrovian_rules(n);
  for (Rule& r : odd_rules(n)) rules.push_back(std::move(r));
  for (const Rule& rule : rules) {
    bool weak = true, strict = true, strong = true;
    for (std::size_t p = 0; p < space.size(); ++p) {
      const Profile pr = space.profile(p);
      const Preorder out = rule(pr);
      for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
          if (a == b) continue;
          bool all_weak = true, all_strict = true, some_strict = false;
          for (int i = 0; i < n; ++i) {
            all_weak &= oracle::weakly(pr, i, a, b);
            all_strict &= oracle::strictly(pr, i, a, b);
            some_strict |= oracle::strictly(pr, i, a, b);
          }
          if (all_weak && !out.weakly(a, b)) weak = strict = strong = false;
          if (all_strict && !out.strictly(a, b)) strict = false;
          if (all_weak && some_strict && !out.strictly(a, b)) strong = false;
        }
      }
    }
    CAPTURE(rule.name());
    const AxiomSuite suite(rule, space);
    CHECK(suite.check(AxiomKind::Unanimity).holds == weak);
    CHECK(suite.check(AxiomKind::StrictUnanimity).holds == strict);
    CHECK(suite.check(AxiomKind::StrongUnanimity).holds == strong);
  }
}

TEST_CASE("unanimity and IIA imply neutrality and monotonicity") {
  for (int n = 1; n <= 3; ++n) {
    const ProfileSpace space(3, n, Domain::Partial);
    std::vector<Rule> rules = arrovian_rules(n);
    for (Rule& r : odd_rules(n)) rules.push_back(std::move(r));
    int arrovian = 0;
    for (const Rule& rule : rules) {
      CAPTURE(rule.name());
      const AxiomSuite suite(rule, space);
      const bool u = suite.check(AxiomKind::Unanimity).holds;
      const bool iia = suite.check(AxiomKind::IIA).holds;
      const bool mono = suite.check(AxiomKind::Monotonicity).holds;
      if (u && iia) {
        ++arrovian;
        CHECK(suite.check(AxiomKind::Neutrality).holds);
        CHECK(suite.check(AxiomKind::StrongNeutrality).holds);
        CHECK(mono);
      }
      if (mono) CHECK(iia);
    }
    CHECK(arrovian >= 6);
  }
}

TEST_CASE("every witness replays") {
  const int n = 2;
  const ProfileSpace space(3, n, Domain::Partial);
  int failures = 0;
  for (const Rule& rule : odd_rules(n)) {
    const AxiomSuite suite(rule, space);
    for (const AxiomReport& report : suite.check(kAllAxioms)) {
      CHECK(report.holds == !report.witness.has_value());
      if (report.holds) continue;
      ++failures;
      CAPTURE(rule.name());
      CAPTURE(axiom_name(report.kind));
      CHECK(replay_witness(rule, report));
      CHECK(parse_axiom_report(format_axiom_report(report)).witness->profiles ==
            report.witness->profiles);
    }
  }
  CHECK(failures > 5);
}

TEST_CASE("linear domain checks") {
  const Rule lexseq = spec_rule(3, rule::LexSeq{{2, 0, 1}});
  for (AxiomKind kind : kArrovianSuite) {
    CHECK(check_axiom(lexseq, kind, Domain::Linear).holds);
  }
  CHECK(check_axiom(lexseq, AxiomKind::StrongUnanimity, Domain::Linear).holds);
}
