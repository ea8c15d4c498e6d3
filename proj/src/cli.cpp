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


#include "arrovian/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>

#include "arrovian/axioms.hpp"
#include "arrovian/classify.hpp"
#include "arrovian/decisive.hpp"
#include "arrovian/error.hpp"
#include "arrovian/format.hpp"
#include "arrovian/measurable.hpp"
#include "arrovian/rules.hpp"

namespace arrovian {

namespace {

namespace fs = std::filesystem;

// Thrown by a command that checked a property and found it false.
struct Violated {};

struct Options {
  int m = 3;
  int n = -1;
  std::string format;
  std::string domain = "partial";
  std::string rule_path;
  std::string delta_path;
  std::string other_path;
  std::string profile_path;
  std::string out_dir;
  std::vector<std::string> axioms;
  bool all_axioms = false;
  bool linear = false;
  bool cond1_only = false;
  bool strong_unanimity = false;
  bool linear_range = false;
  bool sandwich = false;
  bool paranoid = false;
};

Domain domain_of(const Options& o) {
  if (o.domain == "partial") return Domain::Partial;
  if (o.domain == "linear") return Domain::Linear;
  throw InputError("domain must be 'partial' or 'linear'");
}

const rule::Measurable* measurable_of(const RuleSpec& spec) {
  return std::get_if<rule::Measurable>(&spec.variant);
}

ArrovianRule verify_spec(const RuleSpec& spec, int m, Domain domain) {
  const Rule rule = Rule::from_spec(spec, m);
  if (const auto* r = measurable_of(spec)) {
    return ArrovianRule::verify(rule, domain, r->dmap.algebra().blocks());
  }
  return ArrovianRule::verify(rule, domain);
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

void enumerate_orders(const Options& o, std::ostream& out) {
  if (o.m < 1 || o.m > kMaxAlternatives) throw InputError("m must be in [1, 4]");
  const auto orders = enumerate_preorders(o.m, o.linear);
  out << "count=" << orders.size() << "\n";
  for (const Preorder& p : orders) out << "\n" << format_relation(p);
}

void enumerate_rules(const Options& o, std::ostream& out) {
  const auto maps = enumerate_delta_maps(o.n, !o.cond1_only);
  out << "count=" << maps.size() << "\n";
  if (!o.out_dir.empty()) fs::create_directories(o.out_dir);
  for (std::size_t k = 0; k < maps.size(); ++k) {
    out << "\n" << format_delta(maps[k]);
    if (o.out_dir.empty()) continue;
    char name[32];
    std::snprintf(name, sizeof name, "rule_%04zu.rule", k);
    std::ofstream file(fs::path(o.out_dir) / name);
    file << format_rule(RuleSpec{o.n, rule::Delta{maps[k]}});
    if (!file) throw InputError("cannot write " + (fs::path(o.out_dir) / name).string());
  }
}

void verify(const Options& o, std::ostream& out) {
  const RuleSpec spec = load_rule(o.rule_path);
  const Rule rule = Rule::from_spec(spec, o.m);
  std::vector<VoterSet> blocks;
  if (const auto* r = measurable_of(spec)) blocks = r->dmap.algebra().blocks();
  const ProfileSpace space(o.m, spec.n, domain_of(o), blocks);
  std::vector<AxiomKind> kinds;
  for (const auto& name : o.axioms) kinds.push_back(parse_axiom(name));
  if (o.all_axioms || (kinds.empty() && !o.sandwich)) {
    kinds.insert(kinds.end(), std::begin(kArrovianSuite), std::end(kArrovianSuite));
  }
  bool ok = true;
  if (!kinds.empty()) {
    const AxiomSuite suite(rule, space);
    for (const AxiomReport& report : suite.check(kinds)) {
      out << format_axiom_report(report);
      ok = ok && report.holds;
    }
  }
  if (o.sandwich) {
    const SandwichReport report = sandwich_check(verify_spec(spec, o.m, domain_of(o)));
    out << "chain=" << format_chain(report.chain) << "\n"
        << "lower_inclusion=" << bool_text(report.lower_holds)
        << " lower_equal=" << bool_text(report.lower_equal) << "\n"
        << "upper_inclusion=" << bool_text(report.upper_holds)
        << " upper_equal=" << bool_text(report.upper_equal) << "\n"
        << "lex_equal=" << bool_text(report.lex_equal)
        << " criterion=" << bool_text(report.criterion_holds) << "\n";
    ok = ok && report.ok();
  }
  if (!ok) throw Violated{};
}

void extract(const Options& o, std::ostream& out) {
  const RuleSpec spec = load_rule(o.rule_path);
  const ArrovianRule rule = verify_spec(spec, o.m, domain_of(o));
  if (const auto* r = measurable_of(spec)) {
    if (o.format == "dot") throw InputError("DOT output needs a power-set coalition map");
    out << format_dmap(extract_dmap(rule, r->dmap.algebra()));
    return;
  }
  const DeltaMap delta = extract_delta(rule);
  if (o.paranoid) {
    if (spec.n > 2) throw GuardError("paranoid mode supports n <= 2");
    const DecisivenessOracle oracle(rule.rule(), domain_of(o));
    const std::uint32_t full = VoterSet::all(spec.n).mask;
    for (std::uint32_t tied = 0; tied <= full; ++tied) {
      for (std::uint32_t k = 0; k <= full; ++k) {
        if (k & tied) continue;
        for (bool strong : {false, true}) {
          const bool fast = is_decisive(rule, VoterSet{k}, VoterSet{tied}, strong);
          if (fast != oracle.is_decisive(VoterSet{k}, VoterSet{tied}, strong)) {
            out << "paranoid mismatch K=" << format_set(VoterSet{k})
                << " N=" << format_set(VoterSet{tied}) << " strong=" << bool_text(strong)
                << "\n";
            throw Violated{};
          }
        }
      }
    }
  }
  out << (o.format == "dot" ? render_dot(delta) : format_delta(delta));
}

void classify(const Options& o, std::ostream& out) {
  if (!o.delta_path.empty()) {
    const DeltaMap delta = parse_delta(read_file(o.delta_path));
    const ValidationReport report = validate_delta(delta);
    out << "cond1=" << bool_text(report.cond1) << " cond2=" << bool_text(report.cond2)
        << " cond2prime=" << bool_text(report.cond2prime) << "\n";
    for (const Violation& v : report.violations) {
      out << "violation condition=" << condition_name(v.condition)
          << " N=" << format_set(v.n) << " M=" << format_set(v.m) << "\n";
    }
    if (!report.valid()) throw Violated{};
    out << "chain=" << format_chain(chain_of(delta)) << "\n";
    const auto sequence = classify_linear_range(delta, o.m);
    out << "linear_range=" << (sequence ? format_sequence(*sequence) : "none") << "\n";
    return;
  }
  std::vector<DeltaMap> selected;
  for (const DeltaMap& delta : enumerate_delta_maps(o.n, true)) {
    if (o.linear_range && !classify_linear_range(delta, o.m)) continue;
    if (o.strong_unanimity) {
      const Rule rule = Rule::from_spec(RuleSpec{o.n, rule::Delta{delta}}, o.m);
      if (!check_axiom(rule, AxiomKind::StrongUnanimity, domain_of(o)).holds) continue;
    }
    selected.push_back(delta);
  }
  out << "count=" << selected.size() << "\n";
  for (const DeltaMap& delta : selected) {
    out << "\n# chain=" << format_chain(chain_of(delta)) << "\n";
    if (auto sequence = lex_sequence_of(delta)) {
      out << "# lexseq=" << format_sequence(*sequence) << "\n";
    }
    out << format_delta(delta);
  }
}

void extend(const Options& o, std::ostream& out) {
  const RuleSpec spec = load_rule(o.rule_path);
  out << format_delta(extend_from_linear(verify_spec(spec, o.m, Domain::Linear)));
}

DeltaMap load_delta(const std::string& path) { return parse_delta(read_file(path)); }

void compare(const Options& o, std::ostream& out) {
  out << order_name(order_compare(load_delta(o.delta_path), load_delta(o.other_path))) << "\n";
}

void render(const Options& o, std::ostream& out) {
  if (o.delta_path.empty() == o.rule_path.empty()) {
    throw InputError("render-dot needs exactly one of --delta and --rule");
  }
  const DeltaMap delta =
      o.delta_path.empty()
          ? extract_delta(verify_spec(load_rule(o.rule_path), o.m, domain_of(o)))
          : load_delta(o.delta_path);
  out << (o.format == "text" ? format_delta(delta) : render_dot(delta));  // DOT by default
}

void eval(const Options& o, std::ostream& out) {
  const RuleSpec spec = load_rule(o.rule_path);
  const Profile pr = parse_profile(read_file(o.profile_path));
  if (const auto* r = measurable_of(spec)) {
    out << format_relation(eval_measurable(r->dmap, pr));
    return;
  }
  out << format_relation(evaluate(spec, pr));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Arrovian voting systems on partial preorders", "arrovian");
  app.require_subcommand(1);
  Options o;
  auto add_m = [&o](CLI::App* cmd) {
    cmd->add_option("--m", o.m, "Number of alternatives")->check(CLI::Range(1, kMaxAlternatives));
  };
  auto add_n = [&o](CLI::App* cmd) {
    cmd->add_option("--n", o.n, "Number of voters")->required()->check(CLI::Range(0, kMaxVoters));
  };
  auto add_domain = [&o](CLI::App* cmd) {
    cmd->add_option("--domain", o.domain, "Profile domain")
        ->check(CLI::IsMember({"partial", "linear"}));
  };
  auto add_format = [&o](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "dot"}));
  };
  auto add_rule = [&o](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--rule", o.rule_path, "Rule file");
    if (required) opt->required();
  };

  std::vector<std::pair<CLI::App*, std::function<void(const Options&, std::ostream&)>>> commands;

  auto* orders = app.add_subcommand("enumerate-orders", "List all preorders on m alternatives");
  orders->add_option("--m", o.m, "Number of alternatives")->required();
  orders->add_flag("--linear", o.linear, "Only linear preorders");
  commands.emplace_back(orders, enumerate_orders);

  auto* rules = app.add_subcommand("enumerate-rules", "List all valid coalition maps");
  add_n(rules);
  rules->add_flag("--cond1-only", o.cond1_only, "Drop condition (2)");
  rules->add_option("--out-dir", o.out_dir, "Also write one rule file per map");
  commands.emplace_back(rules, enumerate_rules);

  auto* ver = app.add_subcommand("verify", "Check axioms of a rule exhaustively");
  add_rule(ver, true);
  add_m(ver);
  add_domain(ver);
  ver->add_option("--axiom", o.axioms, "Axiom to check (repeatable)");
  ver->add_flag("--all-axioms", o.all_axioms, "Unanimity, IIA, neutrality, strong neutrality, monotonicity");
  ver->add_flag("--sandwich", o.sandwich, "Compare with the lexicographic rules of the chain");
  commands.emplace_back(ver, verify);

  auto* ext = app.add_subcommand("extract", "Extract the coalition map of an arrovian rule");
  add_rule(ext, true);
  add_m(ext);
  add_domain(ext);
  add_format(ext);
  ext->add_flag("--paranoid", o.paranoid, "Cross-check against full quantification (n <= 2)");
  commands.emplace_back(ext, extract);

  auto* cls = app.add_subcommand("classify", "Classify coalition maps");
  cls->add_option("--n", o.n, "Number of voters")->check(CLI::Range(0, kMaxEnumerationVoters));
  cls->add_option("--delta", o.delta_path, "Classify a single coalition map file");
  add_m(cls);
  add_domain(cls);
  cls->add_flag("--require-strong-unanimity", o.strong_unanimity, "Keep strongly unanimous rules");
  cls->add_flag("--linear-range", o.linear_range, "Keep rules with complete outcomes on linear profiles");
  commands.emplace_back(cls, classify);

  auto* ex = app.add_subcommand("extend", "Unique arrovian extension of a linear-domain rule");
  add_rule(ex, true);
  add_m(ex);
  commands.emplace_back(ex, extend);

  auto* cmp = app.add_subcommand("compare", "Compare two rules through their coalition maps");
  cmp->add_option("--delta", o.delta_path, "Left coalition map")->required();
  cmp->add_option("--other", o.other_path, "Right coalition map")->required();
  commands.emplace_back(cmp, compare);

  auto* dot = app.add_subcommand("render-dot", "Draw a coalition map");
  dot->add_option("--delta", o.delta_path, "Coalition map file");
  add_rule(dot, false);
  add_m(dot);
  add_domain(dot);
  add_format(dot);
  commands.emplace_back(dot, render);

  auto* ev = app.add_subcommand("eval", "Evaluate a rule on a profile");
  add_rule(ev, true);
  ev->add_option("--profile", o.profile_path, "Profile file")->required();
  commands.emplace_back(ev, eval);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }
  try {
    for (auto& [cmd, action] : commands) {
      if (cmd->parsed()) action(o, out);
    }
  } catch (const Violated&) {
    return kExitViolated;
  } catch (const NotArrovianError& e) {
    err << "error: " << e.what() << "\n";
    return kExitViolated;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const GuardError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitViolated;
  }
  return kExitOk;
}

}  // namespace arrovian
