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

from fractions import Fraction
from pathlib import Path

import pytest

import bicat_euler as be

FIXTURES = Path(__file__).resolve().parents[2] / "fixtures"
NEGATIVE = Path(__file__).resolve().parents[2] / "tests" / "data" / "negative"


def fixture(name):
    return (FIXTURES / f"{name}.catj").read_text()


def test_category_chi():
    assert be.category_euler(fixture("bz2")).chi == Fraction(1, 2)
    assert be.category_euler(fixture("pair")).chi == 0
    e = be.category_euler(fixture("arrow"))
    assert e.chi == 1
    assert sum(e.weighting) == sum(e.coweighting) == 1


def test_catgraph_chi():
    assert be.catgraph_euler(fixture("psg")).chi == 2
    assert be.catgraph_euler(fixture("span")).chi == 1


def test_matrix_euler():
    assert be.matrix_euler([[1, 2], [0, 1]]).chi == 0
    e = be.matrix_euler([[1, 0], [1, 0]])
    assert e.chi is None
    assert e.weighting is not None
    assert e.coweighting is None


def test_canonical_round_trip():
    text = fixture("psg-collapse")
    assert be.canonical(text) == text
    assert be.kind(text) == "laxfunctor"


def test_diagnostics():
    diags = be.diagnostics((NEGATIVE / "e001-undeclared-object.catj").read_text())
    assert [d["code"] for d in diags] == ["E001"]
    with pytest.raises(ValueError, match="E001"):
        be.category_euler((NEGATIVE / "e001-undeclared-object.catj").read_text())
    assert ("E000" in dict(be.diagnostic_codes()))


def test_check_and_verify():
    assert be.check(fixture("span"), "acyclic")["holds"]
    assert not be.check(fixture("acyclic2"), "pseudogroupoid")["holds"]
    assert be.verify("product-cat", fixture("ez2-to-bz2"))["holds"]
    assert be.verify("gr", fixture("arrow-base-laxcat"))["holds"]
    assert be.verify("gr-bicat", fixture("two-group-psg-trihom"))["holds"]
    with pytest.raises(ValueError):
        be.verify("gr", fixture("bz2"))


def test_generate():
    text = be.generate("pseudogroupoid", seed=4, size=2)
    assert be.check(text, "pseudogroupoid")["holds"]
    assert be.canonical(text) == text
    acyclic = be.generate("acyclic-cat", seed=1, size=5)
    assert be.check(acyclic, "acyclic")["holds"]
