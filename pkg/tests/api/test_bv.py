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
import pytest

from deel.zigzag.api.bv import gerstenhaber_ideal_quotient
from deel.zigzag.api.utils import DegreeZero


def test_regimes(generic_calc, minus_one_calc):
    assert minus_one_calc.bv_operator.symmetric
    assert len(minus_one_calc.bv_operator.insertions) == 6
    assert not generic_calc.bv_operator.symmetric
    assert len(generic_calc.bv_operator.insertions) == 6


@pytest.mark.parametrize("spec", ["rational:-1/1", "generic"])
def test_delta_of_degree_one_generators(calculator, spec):
    calc = calculator(spec)
    unit = calc.ring.monomial_class(())
    assert calc.bv("u2").coordinates == unit.coordinates
    assert calc.render(calc.bv("u2")) == "1"


def test_delta_on_degree_zero(minus_one_calc):
    with pytest.raises(DegreeZero):
        minus_one_calc.bv("z1")
    with pytest.raises(DegreeZero):
        minus_one_calc.bv_operator.delta_cochain({}, 0)
    assert minus_one_calc.bv_operator.delta_or_zero(
        minus_one_calc.ring.generator_class("z1")
    ) is None


@pytest.mark.parametrize("spec", ["rational:-1/1", "generic", "zeta:4"])
def test_delta_squared(calculator, spec):
    calc = calculator(spec)
    bv = calc.bv_operator
    for m in range(2, 4):
        for x in calc.complexes.hh_basis(m):
            assert bv.delta(bv.delta(x)).is_zero


def test_delta_values_are_cocycles(minus_one_calc):
    bv = minus_one_calc.bv_operator
    complexes = minus_one_calc.complexes
    for m in range(1, 4):
        for x in complexes.hh_basis(m):
            value = bv.delta_cochain(x.representative, m)
            assert complexes.is_cocycle(m - 1, value)


@pytest.mark.parametrize(
    "spec, bound",
    [
        ("generic", 2),
        ("rational:-1/1", 3),
        ("rational:1", 3),
        ("zeta:3", 7),
        ("zeta:4", 5),
    ],
)
def test_tables(calculator, spec, bound):
    tables = calculator(spec, bound).tables
    statuses = tables.verify_bv_tables(bound)
    assert statuses
    assert [s.name for s in statuses if s.status != "pass"] == []


def test_bracket_examples(calculator):
    generic = calculator("generic")
    assert generic.render(generic.bracket("z1", "u1")) == "-z1"
    minus_one = calculator("rational:-1/1")
    assert minus_one.render(minus_one.bracket("u2", "w0")) == "-2*w0"
    zeta4 = calculator("zeta:4", 5)
    assert zeta4.render(zeta4.bracket("u1", "w0")) == "-4*w0"


def test_bv_on_product_at_cube_root(calculator):
    calc = calculator("zeta:3", 7)
    assert calc.render(calc.bv("u1*w0")) == "7*w0"


def test_bracket_of_degree_zero_classes(minus_one_calc):
    value = minus_one_calc.bracket("z1", "z2")
    assert value.degree == -1
    assert value.is_zero


def test_bracket_is_graded_antisymmetric(minus_one_calc):
    k = minus_one_calc.field
    gens = [
        minus_one_calc.ring.generator_class(name)
        for name in ("z1", "u1", "u2", "u4")
    ]
    for x in gens:
        for y in gens:
            if x.degree + y.degree == 0:
                continue
            left = minus_one_calc.bv_operator.bracket(x, y).coordinates
            right = minus_one_calc.bv_operator.bracket(y, x).coordinates
            sign = -k.sign((x.degree - 1) * (y.degree - 1))
            assert left == tuple(sign * c for c in right)


def test_gerstenhaber_ideal(minus_one_calc):
    report = gerstenhaber_ideal_quotient(
        minus_one_calc.bv_operator, minus_one_calc.ring, 3
    )
    assert report.computed == [1, 0, 0, 0]
    assert report.ok
