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

from deel.zigzag.api.comparison import Comparison
from deel.zigzag.api.oracle import BarCochain
from deel.zigzag.api.oracle import BarOracle
from deel.zigzag.api.oracle import bar_words
from deel.zigzag.api.oracle import parallel_basis
from deel.zigzag.api.utils import DegreeMismatch
from deel.zigzag.api.utils import WindowExceeded


@pytest.fixture
def oracle(complexes):
    return BarOracle(Comparison(complexes.resolution), complexes, window=3)


def _constant_cochain(oracle, m):
    k = oracle.k
    return BarCochain(
        m, {w: {parallel_basis(w)[-1]: k.one} for w in oracle.words(m)}
    )


@pytest.mark.parametrize("m", range(4))
def test_cochain_basis_size(oracle, m):
    assert len(oracle.cochain_basis(m)) == 4 * 3**m


def test_bar_words():
    assert len(bar_words(0)) == 2
    assert len(bar_words(3)) == 6 * 3**2


@pytest.mark.parametrize("m", range(3))
def test_bar_delta_squared(oracle, m):
    f = _constant_cochain(oracle, m)
    assert oracle.bar_delta(oracle.bar_delta(f)).values == {}


def test_delta_matrix_agrees_with_bar_delta(oracle):
    f = _constant_cochain(oracle, 1)
    matrix = oracle.delta_matrix(1)
    col_index = {pair: n for n, pair in enumerate(matrix.col_labels)}
    vector = {
        col_index[(w, b)]: c
        for w, value in f.values.items()
        for b, c in value.items()
    }
    image = matrix.apply(vector)
    expected = {
        (w, b): c
        for w, value in oracle.bar_delta(f).values.items()
        for b, c in value.items()
        if c
    }
    assert {matrix.row_labels[n]: c for n, c in image.items() if c} == expected


@pytest.mark.parametrize("m", range(4))
def test_dimensions_match_minimal_resolution(oracle, complexes, m):
    assert oracle.hh_dim_oracle(m) == complexes.hh_codim(m)


def test_window(oracle):
    with pytest.raises(WindowExceeded):
        oracle.hh_dim_oracle(4)
    with pytest.raises(WindowExceeded):
        oracle.delta_matrix(4)


def test_round_trip(oracle, complexes):
    for m in range(3):
        for x in complexes.hh_basis(m):
            assert oracle.round_trip(x).coordinates == x.coordinates


def test_transport_of_unit(oracle, complexes):
    unit = complexes.hh_basis(0)
    f = oracle.transport_from(unit[0].representative, 0)
    assert set(f.values) <= set(oracle.words(0))
    assert oracle.transport_to(f) == unit[0].representative


@pytest.mark.parametrize("spec", ["rational:-1/1", "generic"])
def test_cup_agrees_with_bar_side(calculator, spec):
    calc = calculator(spec)
    names = calc.presentation.names
    for a in names:
        for b in names:
            x = calc.ring.generator_class(a)
            y = calc.ring.generator_class(b)
            if x.degree + y.degree > 2:
                continue
            expected = calc.cup_product.cup(x, y)
            computed = calc.oracle.cup_oracle(x, y)
            assert computed.coordinates == expected.coordinates, (a, b)


@pytest.mark.parametrize("spec", ["rational:-1/1", "generic"])
def test_bracket_agrees_with_bar_side(calculator, spec):
    calc = calculator(spec)
    names = calc.presentation.names
    for a in names:
        for b in names:
            x = calc.ring.generator_class(a)
            y = calc.ring.generator_class(b)
            if not 0 < x.degree + y.degree <= 2:
                continue
            expected = calc.bv_operator.bracket(x, y)
            computed = calc.oracle.bracket_oracle(x, y)
            assert computed.coordinates == expected.coordinates, (a, b)


def test_bracket_of_degree_zero_classes(minus_one_calc):
    z1 = minus_one_calc.ring.generator_class("z1")
    assert minus_one_calc.oracle.bracket_oracle(z1, z1).degree == -1


def test_circle_position(oracle):
    f = _constant_cochain(oracle, 1)
    with pytest.raises(DegreeMismatch):
        oracle.circle_i(f, 2, f)
    assert oracle.circle(BarCochain(0), f).values == {}
