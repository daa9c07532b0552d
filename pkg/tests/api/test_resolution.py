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

from deel.zigzag.api.algebra import Basis
from deel.zigzag.api.algebra import source
from deel.zigzag.api.algebra import target
from deel.zigzag.api.resolution import GenIdx
from deel.zigzag.api.resolution import gen_target
from deel.zigzag.api.resolution import generator_element
from deel.zigzag.api.resolution import generators
from deel.zigzag.api.resolution import is_composable
from deel.zigzag.api.resolution import p_basis
from deel.zigzag.api.resolution import reduced_words
from deel.zigzag.api.utils import DegreeMismatch
from deel.zigzag.api.utils import DegreeOutOfRange


@pytest.mark.parametrize(
    "g, expected",
    [(GenIdx(1, 1, 1), 2), (GenIdx(1, 2, 0), 1), (GenIdx(0, 1, 0), 1)],
)
def test_gen_target(g, expected):
    assert gen_target(g) == expected


def test_vertex_normalized():
    assert GenIdx(3, 5, 1) == GenIdx(3, 1, 1)
    assert GenIdx(2, 0, 1).i == 2
    assert GenIdx(2, 1, 3).is_zero
    assert GenIdx(2, 1, -1).is_zero
    assert str(GenIdx(2, 1, 1)) == "f2_(1,1)"


@pytest.mark.parametrize("m", range(6))
def test_sizes(m):
    assert len(generators(m)) == 2 * (m + 1)
    assert len(p_basis(m)) == 32 * (m + 1)
    if m > 0:
        assert len(reduced_words(m)) == 6 * 3 ** (m - 1)


def test_d1(resolution):
    k = resolution.k
    assert dict(resolution.d_generator(GenIdx(1, 1, 1))) == {
        (Basis.A1, GenIdx(0, 2, 0), Basis.E2): k.one,
        (Basis.E1, GenIdx(0, 1, 0), Basis.A1): -k.one,
    }


def test_d2(resolution):
    k = resolution.k
    assert dict(resolution.d_generator(GenIdx(2, 1, 1))) == {
        (Basis.A1, GenIdx(1, 2, 0), Basis.E1): k.one,
        (Basis.E1, GenIdx(1, 1, 0), Basis.A2): k.q,
        (Basis.B2, GenIdx(1, 2, 1), Basis.E1): k.q,
        (Basis.E1, GenIdx(1, 1, 1), Basis.B1): k.one,
    }


@pytest.mark.parametrize("m", range(2, 7))
def test_d_squared(resolution, m):
    for g in generators(m):
        image = resolution.apply_d(m, generator_element(g, resolution.k.one))
        assert resolution.apply_d(m - 1, image) == {}, g


def test_augmentation_kills_boundaries(resolution):
    for g in generators(1):
        image = resolution.apply_d(1, generator_element(g, resolution.k.one))
        assert resolution.augment(image) == {}


def test_degree_errors(resolution):
    x = generator_element(GenIdx(2, 1, 0), resolution.k.one)
    with pytest.raises(DegreeMismatch):
        resolution.apply_d(1, x)
    with pytest.raises(DegreeOutOfRange):
        resolution.apply_d(0, x)
    with pytest.raises(DegreeMismatch):
        resolution.augment(x)


def test_g_tensor_examples(resolution):
    k = resolution.k
    assert dict(resolution.g_tensor(GenIdx(1, 2, 0))) == {(Basis.B1,): k.one}
    assert dict(resolution.g_tensor(GenIdx(2, 1, 1))) == {
        (Basis.A1, Basis.B1): k.one,
        (Basis.B2, Basis.A2): k.q,
    }
    assert dict(resolution.g_tensor(GenIdx(2, 1, 0))) == {
        (Basis.B2, Basis.B1): k.one
    }


@pytest.mark.parametrize("m", range(1, 6))
def test_left_and_right_recursions_agree(resolution, m):
    for g in generators(m):
        left = dict(resolution.g_tensor(g))
        assert left == dict(resolution.right_g_tensor(g))


@pytest.mark.parametrize("m", range(1, 6))
def test_g_tensor_words(resolution, m):
    for g in generators(m):
        terms = resolution.g_tensor(g)
        assert terms
        for word, _ in terms:
            assert len(word) == m
            assert is_composable(word)
            assert source(word[0]) == g.origin
            assert target(word[-1]) == g.target


@pytest.mark.parametrize("m", range(1, 5))
def test_phi_is_a_chain_map(resolution, m):
    for g in generators(m):
        x = generator_element(g, resolution.k.one)
        left = resolution.bar_d(resolution.phi(x))
        right = resolution.phi(resolution.apply_d(m, x))
        assert left == right, g


def test_bar_d_squared(resolution):
    k = resolution.k
    for word in reduced_words(3):
        chain = {(Basis.L1 if source(word[0]) == 1 else Basis.L2,) + word + (
            Basis.E1 if target(word[-1]) == 1 else Basis.E2,
        ): k.one}
        assert resolution.bar_d(resolution.bar_d(chain)) == {}
