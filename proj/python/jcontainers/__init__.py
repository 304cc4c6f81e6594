# Copyright 2026 The jcontainers Authors
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

"""Janson-property solver, induced copies and desk-scale Ramsey helpers.

Probabilities and thresholds accept ``str``, ``int`` or ``fractions.Fraction``.
"""

from fractions import Fraction

from . import _core
from ._core import __version__, arrows_induced, induced_copies, run_cli, sample_gnhalf

__all__ = [
    "__version__",
    "arrows_induced",
    "induced_copies",
    "is_janson",
    "min_lambda",
    "run_cli",
    "sample_gnhalf",
]


def _rational(x):
    if isinstance(x, float):
        raise TypeError("pass an exact value (str, int or Fraction), not a float")
    return str(Fraction(x))


def min_lambda(n, edges, p, tol=1e-9):
    """Minimum of Lambda_p over unit-mass measures, with an exact bracket."""
    return _core.min_lambda(n, [sorted(e) for e in edges], _rational(p), tol)


def is_janson(n, edges, p, R, tol=1e-9):
    """Decide the (p, R)-Janson property; ``answer`` is YES, NO or UNDECIDED."""
    return _core.is_janson(n, [sorted(e) for e in edges], _rational(p), _rational(R), tol)
