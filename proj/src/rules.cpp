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

#include "arrovian/rules.hpp"

#include "arrovian/error.hpp"

namespace arrovian {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string set_text(VoterSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : s.members()) {
    if (!first) out += ",";
    out += std::to_string(v + 1);
    first = false;
  }
  return out + "}";
}

std::string chain_text(const Chain& chain) {
  std::string out;
  for (VoterSet s : chain.sets()) {
    if (!out.empty()) out += "<";
    out += set_text(s);
  }
  return out;
}

bool lex_prefers(const Chain& chain, PairSignature sig) {
  const VoterSet tied = sig.indifferent();
  for (VoterSet j : chain.sets()) {
    if (!j.subset_of(tied)) return j.subset_of(sig.weakly_for);
  }
  return true;
}

bool strong_lex_prefers(const Chain& chain, PairSignature sig) {
  const VoterSet strict = sig.strictly_for();
  for (int lambda = 0; lambda <= chain.length(); ++lambda) {
    const VoterSet inner = chain.at(lambda);
    const VoterSet step = chain.at(lambda + 1) - inner;
    if (inner.subset_of(sig.weakly_for) && step.subset_of(strict)) return true;
  }
  return false;
}

bool lex_seq_prefers(const std::vector<int>& sequence, PairSignature sig) {
  const VoterSet tied = sig.indifferent();
  for (int k : sequence) {
    if (!tied.contains(k)) return sig.weakly_for.contains(k);
  }
  return true;
}

void check_chain(const Chain& chain, int n) {
  for (VoterSet s : chain.sets()) check_subset(s, n);
}

}  // namespace

bool delta_prefers(const DeltaMap& delta, PairSignature sig) {
  const std::uint32_t tied = sig.indifferent().mask;
  const VoterSet strict = sig.strictly_for();
  for (std::uint32_t sub = tied;; sub = (sub - 1) & tied) {
    if (delta.relative(VoterSet{sub}).subset_of(strict)) return true;
    if (sub == 0) break;
  }
  return false;
}

bool filter_prefers(const SetFilter& filter, PairSignature sig) {
  return filter.contains(sig.weakly_for);
}

bool dmap_prefers(const DMap& dmap, PairSignature sig) {
  const VoterSet tied = sig.indifferent();
  const VoterSet strict = sig.strictly_for();
  const auto& members = dmap.algebra().members();
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (!members[k].subset_of(tied)) continue;
    if ((dmap.generators()[k] - members[k]).subset_of(strict)) return true;
  }
  return false;
}

void validate_rule(const RuleSpec& spec) {
  const int n = spec.n;
  check_society(n);
  std::visit(
      overloaded{
          [](const rule::Trivial&) {},
          [n](const rule::Pareto& r) { check_subset(r.junta, n); },
          [n](const rule::Lex& r) { check_chain(r.chain, n); },
          [n](const rule::StrongLex& r) { check_chain(r.chain, n); },
          [n](const rule::LexSeq& r) {
            VoterSet seen;
            for (int k : r.sequence) {
              if (k < 0 || k >= n) throw InputError("sequence voter out of range");
              if (seen.contains(k)) throw InputError("sequence repeats a voter");
              seen = seen | VoterSet{1U << k};
            }
          },
          [n](const rule::Delta& r) {
            if (r.delta.n() != n) throw InputError("coalition map size does not match n");
            if (!satisfies_monotonicity(r.delta)) {
              throw ValidationError("coalition map violates condition (1)");
            }
          },
          [n](const rule::Filter& r) {
            if (r.filter.n() != n) throw InputError("filter size does not match n");
            if (!satisfies_filter_axioms(r.filter)) {
              throw ValidationError("family violates the filter axioms");
            }
          },
          [n](const rule::Measurable& r) {
            if (r.dmap.n() != n) throw InputError("coalition map size does not match n");
            if (!satisfies_monotonicity(r.dmap)) {
              throw ValidationError("coalition map violates condition (1)");
            }
          },
      },
      spec.variant);
}

std::string describe(const RuleSpec& spec) {
  return std::visit(
      overloaded{
          [](const rule::Trivial&) { return std::string("trivial"); },
          [](const rule::Pareto& r) { return "pareto " + set_text(r.junta); },
          [](const rule::Lex& r) { return "lex " + chain_text(r.chain); },
          [](const rule::StrongLex& r) { return "strong_lex " + chain_text(r.chain); },
          [](const rule::LexSeq& r) {
            std::string out = "lexseq (";
            for (std::size_t k = 0; k < r.sequence.size(); ++k) {
              if (k) out += ",";
              out += std::to_string(r.sequence[k] + 1);
            }
            return out + ")";
          },
          [](const rule::Delta&) { return std::string("delta"); },
          [](const rule::Filter& r) {
            auto gen = r.filter.generator();
            return gen ? "filter " + set_text(*gen) : std::string("filter");
          },
          [](const rule::Measurable&) { return std::string("measurable"); },
      },
      spec.variant);
}

bool weakly_prefers(const RuleSpec& spec, PairSignature sig) {
  return std::visit(
      overloaded{
          [](const rule::Trivial&) { return true; },
          [&](const rule::Pareto& r) { return r.junta.subset_of(sig.weakly_for); },
          [&](const rule::Lex& r) { return lex_prefers(r.chain, sig); },
          [&](const rule::StrongLex& r) { return strong_lex_prefers(r.chain, sig); },
          [&](const rule::LexSeq& r) { return lex_seq_prefers(r.sequence, sig); },
          [&](const rule::Delta& r) { return delta_prefers(r.delta, sig); },
          [&](const rule::Filter& r) { return filter_prefers(r.filter, sig); },
          [&](const rule::Measurable& r) { return dmap_prefers(r.dmap, sig); },
      },
      spec.variant);
}

Preorder assemble(const Profile& pr, const std::function<bool(PairSignature)>& decide) {
  const int m = pr.m();
  std::uint32_t bits = 0;
  for (Alt a = 0; a < m; ++a) {
    bits |= 1U << (a * m + a);
    for (Alt b = 0; b < m; ++b) {
      if (a != b && decide(signature(pr, a, b))) bits |= 1U << (a * m + b);
    }
  }
  if (!is_preorder_bits(m, bits)) {
    throw Error("rule produced a non-transitive outcome");
  }
  return unchecked_preorder(m, bits);
}

Preorder evaluate(const RuleSpec& spec, const Profile& pr) {
  validate_rule(spec);
  if (pr.n() != spec.n) throw InputError("profile size does not match the rule");
  return assemble(pr, [&](PairSignature sig) { return weakly_prefers(spec, sig); });
}

Preorder eval_pareto(VoterSet junta, const Profile& pr) {
  check_subset(junta, pr.n());
  return assemble(pr, [&](PairSignature sig) { return junta.subset_of(sig.weakly_for); });
}

Preorder eval_lex(const Chain& chain, const Profile& pr) {
  check_chain(chain, pr.n());
  return assemble(pr, [&](PairSignature sig) { return lex_prefers(chain, sig); });
}

Preorder eval_strong_lex(const Chain& chain, const Profile& pr) {
  check_chain(chain, pr.n());
  return assemble(pr, [&](PairSignature sig) { return strong_lex_prefers(chain, sig); });
}

Preorder eval_lex_seq(const std::vector<int>& sequence, const Profile& pr) {
  return evaluate(RuleSpec{pr.n(), rule::LexSeq{sequence}}, pr);
}

Preorder eval_delta(const DeltaMap& delta, const Profile& pr) {
  return evaluate(RuleSpec{pr.n(), rule::Delta{delta}}, pr);
}

Preorder eval_filter(const SetFilter& filter, const Profile& pr) {
  return evaluate(RuleSpec{pr.n(), rule::Filter{filter}}, pr);
}

Rule::Rule(int n, int m, Function fn, std::string name)
    : n_(n), m_(m), fn_(std::move(fn)), name_(std::move(name)) {
  check_society(n);
  if (m < 1 || m > kMaxAlternatives) throw InputError("alternative count out of range");
}

Rule Rule::from_spec(const RuleSpec& spec, int m) {
  validate_rule(spec);
  auto decide = [spec](PairSignature sig) { return weakly_prefers(spec, sig); };
  return Rule(
      spec.n, m, [decide](const Profile& pr) { return assemble(pr, decide); }, describe(spec));
}

Preorder Rule::operator()(const Profile& pr) const {
  if (pr.n() != n_ || pr.m() != m_) {
    throw InputError("profile shape does not match the rule");
  }
  return fn_(pr);
}

Rule restrict_rule(const Rule& rule, VoterSet indifferent) {
  check_subset(indifferent, rule.n());
  const int n = rule.n();
  return Rule(
      n - indifferent.size(), rule.m(),
      [rule, indifferent, n](const Profile& pr) {
        return rule(extend_with_indifference(pr, indifferent, n));
      },
      rule.name() + " restricted");
}

}  // namespace arrovian
