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


// Text formats.  Voters are written 1-based everywhere; alternatives are the
// rows and columns of relation blocks, and 1-based in witness headers.
//
//   relation   m=3 / one row of 0s and 1s per alternative
//   profile    n=2 / one relation block per voter, blank-line separated
//   delta      n=3 / "{N} -> {Delta N}" for every N in mask order
//   filter     n=3 / gen={..}  or  members={..};{..}
//   dmap       n=3 / partition=[{1,2}|{3}] / "{N} -> gen={G}" per block union
//   rule       n=3 / rule=<kind> key=value ...  (tables may follow inline)
//
// Blank lines and lines starting with '#' are ignored by every parser.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "arrovian/axioms.hpp"
#include "arrovian/coalitions.hpp"
#include "arrovian/profiles.hpp"
#include "arrovian/relations.hpp"
#include "arrovian/rules.hpp"

namespace arrovian {

std::string format_set(VoterSet s);
/// Throws InputError on bad syntax, repeated voters or voters outside 1..n.
VoterSet parse_set(std::string_view text, int n);

std::string format_chain(const Chain& chain);
Chain parse_chain(std::string_view text, int n);

/// "(2,1,3)" for the 0-based sequence {1, 0, 2}.
std::string format_sequence(const std::vector<int>& sequence);
std::vector<int> parse_sequence(std::string_view text, int n);

std::string format_partition(const std::vector<VoterSet>& blocks);
std::vector<VoterSet> parse_partition(std::string_view text, int n);

std::string format_relation(const Preorder& p);
Preorder parse_relation(std::string_view text);

std::string format_profile(const Profile& pr);
Profile parse_profile(std::string_view text);

std::string format_delta(const DeltaMap& delta);
DeltaMap parse_delta(std::string_view text);

std::string format_filter(const SetFilter& filter);
SetFilter parse_filter(std::string_view text);

std::string format_dmap(const DMap& dmap);
DMap parse_dmap(std::string_view text);

/// Self-contained: delta and measurable tables are written inline.
std::string format_rule(const RuleSpec& spec);
/// `file=` and `dmap_file=` paths are resolved against base_dir.
RuleSpec parse_rule(std::string_view text, const std::filesystem::path& base_dir = {});

std::string format_axiom_report(const AxiomReport& report);
AxiomReport parse_axiom_report(std::string_view text);

/// Throws InputError when the file cannot be read.
std::string read_file(const std::filesystem::path& path);
RuleSpec load_rule(const std::filesystem::path& path);

/// Graphviz digraph with one node per subset, ranked by cardinality, and an
/// edge N -> Delta N whenever they differ.
std::string render_dot(const DeltaMap& delta);

}  // namespace arrovian
