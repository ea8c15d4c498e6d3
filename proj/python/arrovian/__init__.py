# Copyright 2026 The Arrovian Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Arrovian voting systems on partial preorders."""

from ._arrovian import (
    DeltaMap,
    GuardError,
    InputError,
    NotArrovianError,
    Preorder,
    RuleSpec,
    ValidationError,
    compare,
    enumerate_delta_maps,
    enumerate_preorders,
    linear_range_sequence,
    round_trip,
    run_cli,
    validate_delta,
)

__all__ = [
    "DeltaMap",
    "GuardError",
    "InputError",
    "NotArrovianError",
    "Preorder",
    "RuleSpec",
    "ValidationError",
    "compare",
    "enumerate_delta_maps",
    "enumerate_preorders",
    "linear_range_sequence",
    "round_trip",
    "run_cli",
    "validate_delta",
]
