# Copyright 2026 The bicat-euler Authors
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

"""Exact Euler characteristics of finite categories and bicategories.

Documents are .catj text. Rationals are returned as fractions.Fraction.
"""

import json
from fractions import Fraction

from . import _core
from ._core import Error, canonical, diagnostic_codes, kind

__all__ = [
    "Error",
    "Euler",
    "canonical",
    "catgraph_euler",
    "category_euler",
    "check",
    "diagnostic_codes",
    "diagnostics",
    "generate",
    "kind",
    "matrix_euler",
    "verify",
]


class Euler:
    """Euler characteristic with the weighting and coweighting it came from."""

    def __init__(self, raw):
        self.chi = _fraction(raw["chi"])
        self.weighting = _vector(raw["weighting"])
        self.coweighting = _vector(raw["coweighting"])

    def __repr__(self):
        return f"Euler(chi={self.chi!r})"


def _fraction(text):
    return None if text is None else Fraction(text)


def _vector(entries):
    return None if entries is None else [Fraction(x) for x in entries]


def category_euler(text):
    return Euler(_core.category_euler(text))


def catgraph_euler(text):
    """Accepts a category (read as locally discrete), cat-graph or bicategory."""
    return Euler(_core.catgraph_euler(text))


def matrix_euler(rows):
    return Euler(_core.matrix_euler([[str(Fraction(x)) for x in row] for row in rows]))


def diagnostics(text):
    return json.loads(_core.diagnostics(text))


def check(text, predicate):
    """predicate: acyclic, fibered, pseudogroupoid, biequivalence, bifibered."""
    return json.loads(_core.check(text, predicate))


def verify(theorem, text):
    """theorem: gr, product-cat, equivalence, biequivalence, gr-bicat, product-bicat."""
    return json.loads(_core.verify(theorem, text))


def generate(kind, seed=0, size=2):
    """kind: acyclic-cat, groupoid-valued-laxcat, pseudogroupoid."""
    return _core.generate(kind, seed, size)
