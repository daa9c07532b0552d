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

from deel.zigzag.api.algebra import ZigzagAlgebra
from deel.zigzag.api.complexes import HochschildComplexes
from deel.zigzag.api.resolution import MinimalResolution
from deel.zigzag.api.scalars import QSpec
from deel.zigzag.api.scalars import make_field
from deel.zigzag.hochschild import HochschildCalculator

# One value of q per case of the classification, plus a second root of unity
# of even order.
Q_SPECS = ["generic", "rational:2", "rational:-1/1", "zeta:3", "zeta:4"]


@pytest.fixture(params=Q_SPECS)
def field(request):
    return make_field(QSpec.parse(request.param))


@pytest.fixture
def generic_field():
    return make_field(QSpec.generic())


@pytest.fixture
def minus_one_field():
    return make_field(QSpec.rational(-1))


@pytest.fixture
def algebra(field):
    return ZigzagAlgebra(field)


@pytest.fixture
def resolution(algebra):
    return MinimalResolution(algebra)


@pytest.fixture
def complexes(resolution):
    return HochschildComplexes(resolution)


@pytest.fixture(scope="session")
def calculator():
    """Factory of calculators shared by the whole session, keyed by q and
    maximum degree."""
    built = {}

    def get(spec: str, max_degree: int = 4) -> HochschildCalculator:
        key = (spec, max_degree)
        if key not in built:
            built[key] = HochschildCalculator(QSpec.parse(spec), max_degree)
        return built[key]

    return get


@pytest.fixture
def generic_calc(calculator):
    return calculator("generic", 4)


@pytest.fixture
def minus_one_calc(calculator):
    return calculator("rational:-1/1", 4)
