# -*- coding: utf-8 -*-
# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.
import numpy as np
import pytest

from deel.zigzag.api.products import CupProduct
from deel.zigzag.api.products import hilbert_series
from deel.zigzag.api.resolution import GenIdx
from deel.zigzag.api.resolution import generators
from deel.zigzag.api.utils import DegreeOverflow
from deel.zigzag.api.utils import PresentationMismatch


def test_diagonal_terms(generic_calc):
    cup = generic_calc.cup_product
    terms = cup.diagonal(GenIdx(1, 1, 1))
    assert [(t.split, t.left, t.right) for t in terms] == [
        (0, GenIdx(0, 1, 0), GenIdx(1, 1, 1)),
        (1, GenIdx(1, 1, 1), GenIdx(0, 2, 0)),
    ]
    with pytest.raises(ValueError):
        cup.diagonal(GenIdx(1, 1, 2))


@pytest.mark.parametrize("m", range(1, 5))
def test_diagonal_is_a_chain_map(calculator, m):
    for spec in ("generic", "rational:-1/1", "zeta:4"):
        cup = calculator(spec).cup_product
        for g in generators(m):
            assert cup.chain_map_defect(g) == {}, (spec, g)


def test_closed_form_matches_diagonal(calculator):
    for spec in ("generic", "rational:-1/1", "zeta:3"):
        calc = calculator(spec)
        cup, complexes = calc.cup_product, calc.complexes
        for m in range(3):
            for n in range(3 - m):
                for x in complexes.hh_basis(m):
                    for y in complexes.hh_basis(n):
                        closed = cup.cup_closed_form(
                            x.representative, y.representative
                        )
                        diagonal = cup.cup_via_diagonal(
                            x.representative, y.representative
                        )
                        assert closed == diagonal


def test_unit_law(minus_one_calc):
    cup = minus_one_calc.cup_product
    one = cup.unit_class()
    for m in range(3):
        for x in minus_one_calc.complexes.hh_basis(m):
            assert cup.cup(one, x).coordinates == x.coordinates
            assert cup.cup(x, one).coordinates == x.coordinates


def test_graded_commutativity(minus_one_calc):
    k = minus_one_calc.field
    cup = minus_one_calc.cup_product
    basis = [x for m in range(3) for x in minus_one_calc.complexes.hh_basis(m)]
    for x in basis:
        for y in basis:
            if x.degree + y.degree > 4:
                continue
            sign = k.sign(x.degree * y.degree)
            flipped = tuple(sign * c for c in cup.cup(y, x).coordinates)
            assert cup.cup(x, y).coordinates == flipped


def test_degree_overflow(generic_calc):
    cup = CupProduct(generic_calc.complexes, max_degree=1)
    x = generic_calc.complexes.hh_basis(1)[0]
    with pytest.raises(DegreeOverflow):
        cup.cup(x, x)


def test_cup_renders_in_generators(generic_calc):
    value = generic_calc.cup("u2", "u1")
    assert value.degree == 2
    assert generic_calc.render(value) == "-u1*u2"
    assert generic_calc.render(generic_calc.cup("u1", "u1")) == "0"


def test_monomials(generic_calc):
    assert generic_calc.ring.monomials(1) == [
        ("z1", "u1"),
        ("z1", "u2"),
        ("z2", "u1"),
        ("z2", "u2"),
        ("u1",),
        ("u2",),
    ]
    assert generic_calc.ring.monomials(0) == [(), ("z1",), ("z2",)]


def test_monomials_repeat_even_generators(minus_one_calc):
    monomials = minus_one_calc.ring.monomials(4)
    assert ("w0", "w0") in monomials
    assert ("u1", "u1", "w0") not in monomials


def test_decompose(minus_one_calc):
    ring = minus_one_calc.ring
    k = minus_one_calc.field
    w0 = ring.generator_class("w0")
    assert ring.decompose(w0) == ((k.one, ("w0",)),)
    assert ring.render(ring.monomial_class(())) == "1"


@pytest.mark.parametrize(
    "spec, bound", [("generic", 3), ("rational:-1/1", 4), ("rational:1", 4)]
)
def test_verify_presentation(calculator, spec, bound):
    report = calculator(spec).ring.verify_presentation(bound, strict=True)
    assert report.ok
    checked = [r for r in report.relations if r.degree <= bound]
    assert all(r.status == "pass" for r in checked)
    assert set(report.generation) == set(range(bound + 1))


def test_verify_presentation_reports_failures(calculator):
    calc = calculator("rational:-1/1")
    ring = calc.ring
    original = ring.presentation.relations
    broken = [r for r in original if r.text == "u1*u2 - q*z1*w0"]
    # u1*u2 alone is not zero
    ring.presentation.relations = [
        type(broken[0])("u1*u2", broken[0].terms[:1])
    ]
    try:
        report = ring.verify_presentation(2)
        assert not report.ok
        assert report.relations[0].status == "fail"
        assert report.relations[0].witness
        with pytest.raises(PresentationMismatch):
            ring.verify_presentation(2, strict=True)
    finally:
        ring.presentation.relations = original


def test_hilbert_series(calculator):
    np.testing.assert_array_equal(
        hilbert_series(calculator("generic").presentation, 4), [1, 0, 0, 0, 0]
    )
    np.testing.assert_array_equal(
        hilbert_series(calculator("rational:-1/1").presentation, 6),
        [1, 0, 3, 0, 5, 0, 7],
    )
    np.testing.assert_array_equal(
        hilbert_series(calculator("zeta:4").presentation, 8),
        [1, 0, 0, 0, 3, 0, 0, 0, 5],
    )


def test_nilpotency(calculator):
    generic = calculator("generic").ring
    assert generic.nilpotency_index("u1", 2) == 2
    assert generic.nilpotency_index("z1", 2) == 2
    minus_one = calculator("rational:-1/1").ring
    assert minus_one.nilpotency_index("w0", 2) is None


@pytest.mark.parametrize("spec, bound", [("generic", 3), ("rational:-1/1", 4)])
def test_nilpotent_quotient(calculator, spec, bound):
    report = calculator(spec).ring.nilpotent_quotient(bound)
    assert report.ok
    assert report.computed == report.expected
