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


// Finite measurable societies: partition algebras, filters inside an
// algebra, and the filter-valued coalition maps that classify arrovian rules
// on measurable profiles.

#pragma once

#include <vector>

#include "arrovian/coalitions.hpp"
#include "arrovian/decisive.hpp"
#include "arrovian/profiles.hpp"

namespace arrovian {

/// Throws InputError unless the blocks partition {1..n}.
Algebra algebra_from_partition(int n, std::vector<VoterSet> blocks);

/// F1-F3 relative to the algebra; with `ultra`, also proper and containing K
/// or its complement for every measurable K.  Throws InputError when the
/// family has non-measurable members.
bool is_filter(const SetFilter& family, const Algebra& algebra, bool ultra);

/// Is every pair signature of the profile measurable?
bool is_measurable(const Profile& pr, const Algebra& algebra);

/// Throws InputError on non-measurable profiles, ValidationError when the
/// map fails condition (1).
Preorder eval_measurable(const DMap& dmap, const Profile& pr);

/// D N = (G_N) with G_N \ N the intersection of the measurable coalitions
/// decisive relative to N.  The rule must have been verified on the block
/// profiles of the algebra's partition.
DMap extract_dmap(const ArrovianRule& rule, const Algebra& algebra);

}  // namespace arrovian
