# Copyright 2026 The fermisched Authors
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
"""Measurement schedules for fermionic two- and four-point correlators.

Schedules are returned as dictionaries in the same layout as the JSON files
written by the command-line tool.
"""

import json

from . import _core

__all__ = [
    "schedule_two_point",
    "schedule_four_point",
    "schedule_lattice",
    "reference_schedule",
    "verify",
    "cover_stats",
    "export_ilp",
]


def schedule_two_point(modes=None, edges=None, vertices=None):
    return json.loads(_core.schedule_two_point(modes=modes, edges=edges, vertices=vertices))


def schedule_four_point(modes, method="exact", restarts=20, seed=0, budget=None):
    return json.loads(_core.schedule_four_point(modes, method, restarts, seed, budget))


def schedule_lattice(kind, rows, cols, method="tiling", restarts=20, seed=0):
    return json.loads(_core.schedule_lattice(kind, rows, cols, method, restarts, seed))


def reference_schedule(modes):
    return json.loads(_core.reference_schedule(modes))


def verify(schedule, trials=20, seed=0, shots=None, tol=1e-9):
    text = schedule if isinstance(schedule, str) else json.dumps(schedule)
    return _core.verify(text, trials, seed, shots, tol)


cover_stats = _core.cover_stats
export_ilp = _core.export_ilp
