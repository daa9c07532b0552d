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

from deel.zigzag.api.scalars import QKind
from deel.zigzag.api.scalars import QSpec
from deel.zigzag.api.scalars import classify_q
from deel.zigzag.api.scalars import make_field
from deel.zigzag.api.scalars import q_pow
from deel.zigzag.api.utils import BadOrder
from deel.zigzag.api.utils import ConfigurationError
from deel.zigzag.api.utils import ZeroQ


@pytest.mark.parametrize(
    "text, expected",
    [
        ("generic", "generic"),
        ("rational:-1/1", "rational:-1/1"),
        ("rational:3", "rational:3/1"),
        ("rational:4/6", "rational:2/3"),
        (" zeta:5 ", "zeta:5"),
    ],
)
def test_parse(text, expected):
    assert str(QSpec.parse(text)) == expected


@pytest.mark.parametrize(
    "text, error",
    [
        ("rational:0", ZeroQ),
        ("zeta:0", BadOrder),
        ("zeta:-2", BadOrder),
        ("rational:x", ConfigurationError),
        ("zeta", ConfigurationError),
        ("complex:1", ConfigurationError),
    ],
)
def test_parse_errors(text, error):
    with pytest.raises(error):
        QSpec.parse(text)


def test_zero_denominator():
    with pytest.raises(ConfigurationError):
        QSpec.rational(1, 0)


@pytest.mark.parametrize(
    "spec, kind, order",
    [
        (QSpec.generic(), QKind.NOT_ROOT_OF_UNITY, None),
        (QSpec.rational(-1), QKind.PLUS_MINUS_ONE, None),
        (QSpec.rational(1), QKind.PLUS_MINUS_ONE, None),
        (QSpec.rational(3, 2), QKind.NOT_ROOT_OF_UNITY, None),
        (QSpec.zeta(1), QKind.PLUS_MINUS_ONE, None),
        (QSpec.zeta(2), QKind.PLUS_MINUS_ONE, None),
        (QSpec.zeta(6), QKind.PRIMITIVE_ROOT, 6),
    ],
)
def test_classify(spec, kind, order):
    qclass = classify_q(make_field(spec))
    assert qclass.kind is kind
    assert qclass.order == order


def test_q_pow_examples():
    zeta4 = make_field(QSpec.zeta(4))
    assert q_pow(zeta4, 6) == q_pow(zeta4, 2)
    assert q_pow(zeta4, 2) == -zeta4.one

    two = make_field(QSpec.rational(2))
    assert q_pow(two, -1) == two.convert_rational(1, 2)
    assert two.to_str(q_pow(two, -2)) == "1/4"

    generic = make_field(QSpec.generic())
    assert q_pow(generic, 3) == generic.q * generic.q * generic.q
    assert generic.to_str(q_pow(generic, 3)) == "q**3"


@pytest.mark.parametrize("order", [3, 4, 5, 6, 8])
def test_primitive_root_order(order):
    k = make_field(QSpec.zeta(order))
    assert q_pow(k, order) == k.one
    for t in range(1, order):
        assert q_pow(k, t) != k.one
    assert q_pow(k, -1) * k.q == k.one


def test_field_axioms(field):
    q = field.q
    samples = [field.convert(3), q, q + field.one, field.q_pow(-2) - q]
    for a in samples:
        for b in samples:
            assert a * b == b * a
            for c in samples:
                assert (a * b) * c == a * (b * c)
                assert a * (b + c) == a * b + a * c
        if not field.is_zero(a):
            assert a * field.inv(a) == field.one
    assert field.is_zero(q - q)


def test_inverse_of_zero(field):
    with pytest.raises(ZeroDivisionError):
        field.inv(field.zero)


def test_sign(field):
    assert field.sign(4) == field.one
    assert field.sign(-3) == -field.one
