# Copyright 2026 The tugx Authors
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

"""TU-game solutions, extension operators and axiom checks."""

import json

from ._tugx import (
    DomainViolation,
    Game,
    IncompatibleSubject,
    InconsistentSystem,
    MissingStructure,
    ParseError,
    UnknownName,
    axioms,
    extend,
    max_partition_value,
    parse_game,
    random_game,
    solve,
)
from . import _tugx

__all__ = [
    "DomainViolation",
    "Game",
    "IncompatibleSubject",
    "InconsistentSystem",
    "MissingStructure",
    "ParseError",
    "UnknownName",
    "axioms",
    "check",
    "check_theorem",
    "extend",
    "max_partition_value",
    "parse_game",
    "random_game",
    "solve",
]


def check(axiom, subject, corpus, f=(), operator_level=False, workers=1, tol=1e-9):
    """Checks one axiom; returns the report as a dict (verdict, cases, witness)."""
    if isinstance(f, str):
        f = [f]
    return json.loads(_tugx._check(axiom, subject, corpus, list(f), operator_level, workers, tol))


def check_theorem(theorem, f, corpus, workers=1):
    """Runs a theorem's axiom list against the value built from benchmark f."""
    return json.loads(_tugx._check_theorem(theorem, f, corpus, workers))
