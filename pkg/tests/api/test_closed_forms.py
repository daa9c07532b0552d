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

from deel.zigzag.api import closed_forms
from deel.zigzag.api.algebra import Basis
from deel.zigzag.api.resolution import GenIdx
from deel.zigzag.api.scalars import QClass
from deel.zigzag.api.scalars import QKind
from deel.zigzag.api.scalars import QSpec
from deel.zigzag.api.scalars import make_field

GENERIC = QClass(QKind.NOT_ROOT_OF_UNITY)
PM_ONE = QClass(QKind.PLUS_MINUS_ONE)
ZETA3 = QClass(QKind.PRIMITIVE_ROOT, 3)
ZETA4 = QClass(QKind.PRIMITIVE_ROOT, 4)


@pytest.mark.parametrize(
    "qclass, expected",
    [(GENERIC, None), (PM_ONE, None), (ZETA3, 6), (ZETA4, 4)],
)
def test_period(qclass, expected):
    assert closed_forms.period(qclass) == expected


@pytest.mark.parametrize(
    "qclass, m, expected",
    [
        (GENERIC, 0, 0),
        (GENERIC, 3, 6),
        (PM_ONE, 5, 5),
        (PM_ONE, 6, 7),
        (ZETA3, 5, 9),
        (ZETA3, 6, 11),
        (ZETA3, 7, 14),
        (ZETA4, 3, 5),
        (ZETA4, 4, 7),
    ],
)
def test_rank_tau(qclass, m, expected):
    assert closed_forms.rank_tau(qclass, m) == expected


def test_printed_rank_tau_misses_the_second_drop():
    assert closed_forms.printed_rank_tau(ZETA3, 5) == 9
    assert closed_forms.printed_rank_tau(ZETA3, 6) == 12
    assert closed_forms.printed_rank_tau(PM_ONE, 6) == 7


@pytest.mark.parametrize(
    "qclass, m, expected",
    [
        (PM_ONE, 0, 3),
        (PM_ONE, 5, 12),
        (GENERIC, 7, 2),
        (ZETA3, 4, 3),
        (ZETA3, 5, 4),
        (ZETA3, 6, 3),
        (ZETA3, 11, 8),
    ],
)
def test_hh_dim(qclass, m, expected):
    assert closed_forms.hh_dim(qclass, m) == expected


@pytest.mark.parametrize(
    "qclass, m, expected",
    [
        (GENERIC, 0, 3),
        (GENERIC, 1, 2),
        (GENERIC, 2, 1),
        (GENERIC, 5, 0),
        (PM_ONE, 0, 3),
        (PM_ONE, 4, 10),
        (ZETA3, 6, 3),
        (ZETA3, 7, 6),
        (ZETA3, 8, 3),
        (ZETA3, 9, 0),
        (ZETA4, 8, 5),
    ],
)
def test_hh_codim(qclass, m, expected):
    assert closed_forms.hh_codim(qclass, m) == expected


@pytest.mark.parametrize(
    "qclass, m, expected, printed",
    [
        (PM_ONE, 4, 7, 7),
        (PM_ONE, 3, 5, 5),
        (GENERIC, 9, 2, 2),
        (ZETA3, 4, 3, 3),
        (ZETA3, 5, 3, 3),
        (ZETA3, 6, 2, 2),
        (ZETA3, 10, 5, 7),
        (ZETA3, 12, 2, 4),
    ],
)
def test_hc_dim(qclass, m, expected, printed):
    assert closed_forms.hc_dim(qclass, m) == expected
    assert closed_forms.printed_hc_dim(qclass, m) == printed


@pytest.mark.parametrize("qclass", [GENERIC, PM_ONE, ZETA3, ZETA4])
def test_rank_sigma_is_consistent(qclass):
    for m in range(1, 12):
        rank = closed_forms.rank_sigma(qclass, m)
        previous = closed_forms.rank_sigma(qclass, m - 1)
        assert rank >= 0
        assert 4 * m - rank - previous == closed_forms.hh_codim(qclass, m - 1)


def test_families():
    k = make_field(QSpec.generic())
    assert closed_forms.e_family(k, 2, 1) == {
        (Basis.E1, GenIdx(2, 1, 1)): k.one,
        (Basis.E2, GenIdx(2, 2, 1)): k.q,
    }
    assert closed_forms.beta_family(k, 1, 0, k.one) == {
        (Basis.B1, GenIdx(1, 2, 0)): k.one,
        (Basis.B2, GenIdx(1, 1, 0)): k.one,
    }
    assert closed_forms.loop_family(k, 0, 0, k.zero) == {
        (Basis.L1, GenIdx(0, 1, 0)): k.one
    }


@pytest.mark.parametrize(
    "spec, m, count",
    [
        ("generic", 0, 3),
        ("generic", 1, 2),
        ("generic", 3, 0),
        ("rational:-1/1", 1, 4),
        ("rational:-1/1", 2, 6),
        ("zeta:4", 4, 3),
        ("zeta:4", 5, 6),
        ("zeta:3", 7, 6),
    ],
)
def test_expected_cocycle_counts(spec, m, count):
    k = make_field(QSpec.parse(spec))
    assert len(closed_forms.expected_cocycles(k, m)) == count
