# Copyright 2026 The qudiag Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Phase-context synthesis of diagonal unitaries on qudit registers."""

from ._core import (
    CapacityError,
    Circuit,
    DomainError,
    brute_force_optimal,
    cancel_adjacent,
    check_diagonal_equiv,
    expansion_cost,
    greedy_signed_expansion,
    oracle_cinc,
    phase_context,
    standard_expansion,
    synth_cinc,
    synth_diagonal,
    validate_expansion,
    value_to_dits,
)

__all__ = [
    "CapacityError",
    "Circuit",
    "DomainError",
    "brute_force_optimal",
    "cancel_adjacent",
    "check_diagonal_equiv",
    "expansion_cost",
    "greedy_signed_expansion",
    "oracle_cinc",
    "phase_context",
    "standard_expansion",
    "synth_cinc",
    "synth_diagonal",
    "validate_expansion",
    "value_to_dits",
]
