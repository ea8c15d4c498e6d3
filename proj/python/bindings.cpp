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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "arrovian/axioms.hpp"
#include "arrovian/classify.hpp"
#include "arrovian/cli.hpp"
#include "arrovian/decisive.hpp"
#include "arrovian/error.hpp"
#include "arrovian/format.hpp"
#include "arrovian/measurable.hpp"

namespace py = pybind11;
using namespace arrovian;

namespace {

Domain parse_domain(const std::string& name) {
  if (name == "partial") return Domain::Partial;
  if (name == "linear") return Domain::Linear;
  throw InputError("domain must be 'partial' or 'linear'");
}

// Voter sets cross the boundary as sorted lists of 1-based voters.
std::vector<int> voters(VoterSet s) {
  std::vector<int> out;
  for (int v : s.members()) out.push_back(v + 1);
  return out;
}

VoterSet from_voters(const std::vector<int>& list) {
  VoterSet s;
  for (int v : list) {
    if (v < 1 || v > kMaxVoters) throw InputError("voter out of range");
    s = s | VoterSet{1U << (v - 1)};
  }
  return s;
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> table_of(const DeltaMap& d) {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  for (std::uint32_t mask = 0; mask < d.table().size(); ++mask) {
    out.emplace_back(voters(VoterSet{mask}), voters(d.table()[mask]));
  }
  return out;
}

Rule rule_of(const RuleSpec& spec, int m) { return Rule::from_spec(spec, m); }

ArrovianRule verified(const RuleSpec& spec, int m, Domain domain) {
  const Rule rule = rule_of(spec, m);
  if (const auto* r = std::get_if<rule::Measurable>(&spec.variant)) {
    return ArrovianRule::verify(rule, domain, r->dmap.algebra().blocks());
  }
  return ArrovianRule::verify(rule, domain);
}

}  // namespace

PYBIND11_MODULE(_arrovian, mod) {
  mod.doc() = "Arrovian voting systems on partial preorders";

  py::register_exception<InputError>(mod, "InputError", PyExc_ValueError);
  py::register_exception<ValidationError>(mod, "ValidationError", PyExc_ValueError);
  py::register_exception<GuardError>(mod, "GuardError", PyExc_RuntimeError);
  py::register_exception<NotArrovianError>(mod, "NotArrovianError", PyExc_RuntimeError);

  py::class_<Preorder>(mod, "Preorder")
      .def_static("parse", &parse_relation, py::arg("text"))
      .def_static("from_tiers", &Preorder::from_tiers, py::arg("m"), py::arg("tiers"))
      .def_property_readonly("m", &Preorder::m)
      .def_property_readonly("bits", &Preorder::bits)
      .def("weakly", &Preorder::weakly, py::arg("a"), py::arg("b"))
      .def("is_complete", &Preorder::is_complete)
      .def("__eq__", [](const Preorder& a, const Preorder& b) { return a == b; })
      .def("__str__", &format_relation)
      .def("__repr__", [](const Preorder& p) {
        return "<Preorder m=" + std::to_string(p.m()) + " bits=" + std::to_string(p.bits()) + ">";
      });

  mod.def(
      "enumerate_preorders",
      [](int m, bool linear) { return enumerate_preorders(m, linear); }, py::arg("m"),
      py::arg("linear") = false);

  py::class_<DeltaMap>(mod, "DeltaMap")
      .def_static("parse", &parse_delta, py::arg("text"))
      .def_static("identity", &DeltaMap::identity, py::arg("n"))
      .def_property_readonly("n", &DeltaMap::n)
      .def("table", &table_of, "List of (N, Delta N) pairs in mask order")
      .def("at", [](const DeltaMap& d, const std::vector<int>& n) {
        return voters(d.at(from_voters(n)));
      })
      .def("chain", [](const DeltaMap& d) {
        const Chain chain = chain_of(d);
        std::vector<std::vector<int>> out;
        for (VoterSet s : chain.sets()) out.push_back(voters(s));
        return out;
      })
      .def("__eq__", [](const DeltaMap& a, const DeltaMap& b) { return a == b; })
      .def("__str__", &format_delta);

  mod.def(
      "enumerate_delta_maps",
      [](int n, bool require_cond2) { return enumerate_delta_maps(n, require_cond2); },
      py::arg("n"), py::arg("require_cond2") = true);

  mod.def(
      "validate_delta",
      [](const DeltaMap& d) {
        const ValidationReport r = validate_delta(d);
        py::dict out;
        out["cond1"] = r.cond1;
        out["cond2"] = r.cond2;
        out["cond2prime"] = r.cond2prime;
        return out;
      },
      py::arg("delta"));

  mod.def("round_trip", [](const DeltaMap& d, int m) { return round_trip(d, m); },
          py::arg("delta"), py::arg("m") = 3);

  mod.def(
      "linear_range_sequence",
      [](const DeltaMap& d) -> std::optional<std::vector<int>> {
        auto seq = classify_linear_range(d);
        if (!seq) return std::nullopt;
        for (int& v : *seq) ++v;
        return seq;
      },
      py::arg("delta"));

  mod.def(
      "compare",
      [](const DeltaMap& a, const DeltaMap& b) { return std::string(order_name(order_compare(a, b))); },
      py::arg("delta"), py::arg("other"));

  py::class_<RuleSpec>(mod, "RuleSpec")
      .def_static("parse", [](const std::string& text) { return parse_rule(text); },
                  py::arg("text"))
      .def_static("load", [](const std::string& path) { return load_rule(path); }, py::arg("path"))
      .def_static("from_delta", [](const DeltaMap& d) { return RuleSpec{d.n(), rule::Delta{d}}; })
      .def_readonly("n", &RuleSpec::n)
      .def("describe", [](const RuleSpec& s) { return describe(s); })
      .def(
          "evaluate",
          [](const RuleSpec& s, const std::string& profile_text) {
            const Profile pr = parse_profile(profile_text);
            if (const auto* r = std::get_if<rule::Measurable>(&s.variant)) {
              return eval_measurable(r->dmap, pr);
            }
            return evaluate(s, pr);
          },
          py::arg("profile"))
      .def(
          "check_axioms",
          [](const RuleSpec& s, const std::vector<std::string>& names, int m,
             const std::string& domain) {
            const Rule rule = rule_of(s, m);
            std::vector<VoterSet> blocks;
            if (const auto* r = std::get_if<rule::Measurable>(&s.variant)) {
              blocks = r->dmap.algebra().blocks();
            }
            const ProfileSpace space(m, s.n, parse_domain(domain), blocks);
            const AxiomSuite suite(rule, space);
            std::vector<AxiomKind> kinds;
            for (const auto& name : names) kinds.push_back(parse_axiom(name));
            if (kinds.empty()) kinds.assign(std::begin(kArrovianSuite), std::end(kArrovianSuite));
            py::dict out;
            for (const AxiomReport& r : suite.check(kinds)) {
              out[py::str(std::string(axiom_name(r.kind)))] = r.holds;
            }
            return out;
          },
          py::arg("axioms") = std::vector<std::string>{}, py::arg("m") = 3,
          py::arg("domain") = "partial")
      .def(
          "extract",
          [](const RuleSpec& s, int m, const std::string& domain) {
            return extract_delta(verified(s, m, parse_domain(domain)));
          },
          py::arg("m") = 3, py::arg("domain") = "partial")
      .def("__str__", &format_rule);

  mod.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs one CLI command; returns (exit_code, stdout, stderr).");
}
