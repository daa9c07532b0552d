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
"""
This module implements the calculator that wires the building blocks of
:mod:`deel.zigzag.api` together for one value of q: exact field, algebra,
minimal resolution, complexes, cup product, comparison morphisms, BV
operator and bar-complex oracle.
"""
import logging
from dataclasses import dataclass
from typing import List
from typing import Optional
from typing import Union

from deel.zigzag.api import closed_forms
from deel.zigzag.api.algebra import ZigzagAlgebra
from deel.zigzag.api.bv import BVOperator
from deel.zigzag.api.bv import BVTables
from deel.zigzag.api.comparison import Comparison
from deel.zigzag.api.complexes import HHClass
from deel.zigzag.api.complexes import HochschildComplexes
from deel.zigzag.api.oracle import DEFAULT_WINDOW
from deel.zigzag.api.oracle import BarOracle
from deel.zigzag.api.presentations import parse_monomial
from deel.zigzag.api.presentations import presentation
from deel.zigzag.api.products import CupProduct
from deel.zigzag.api.products import RingStructure
from deel.zigzag.api.resolution import MinimalResolution
from deel.zigzag.api.scalars import QSpec
from deel.zigzag.api.scalars import make_field
from deel.zigzag.api.utils import DegreeOutOfRange
from deel.zigzag.api.utils import UnknownClass

logger = logging.getLogger(__name__)


@dataclass
class DimsRow:
    """Computed dimensions of one degree next to their closed forms.

    `*_printed` columns hold the published values where they differ from
    the corrected closed forms.
    """

    m: int
    rank_tau: int
    rank_tau_expected: int
    rank_tau_printed: int
    hh: int
    hh_expected: int
    hh_codim: int
    hh_codim_expected: int
    hc: int
    hc_expected: int
    hc_printed: int

    @property
    def ok(self) -> bool:
        return (
            self.rank_tau == self.rank_tau_expected
            and self.hh == self.hh_expected
            and self.hh_codim == self.hh_codim_expected
            and self.hc == self.hc_expected
        )


class HochschildCalculator:
    """Hochschild theory of the quantum zigzag algebra A_q for one q.

    :param QSpec qspec: choice of q.
    :param int max_degree: largest degree reachable through named classes
        and products.
    :param int window: largest degree handled by the bar-complex oracle.

    Example::

        from deel.zigzag import HochschildCalculator, QSpec

        calculator = HochschildCalculator(QSpec.zeta(4), max_degree=6)

        # dimensions next to their closed forms
        for row in calculator.dims():
            print(row.m, row.hh, row.hh_codim, row.hc, row.ok)

        # Delta(u1*w1) = 3*w1 when q is a primitive 4th root of unity
        print(calculator.render(calculator.bv("u1*w1")))

        # [u1, w0] = -4*w0
        print(calculator.render(calculator.bracket("u1", "w0")))
    """

    def __init__(
        self,
        qspec: QSpec,
        max_degree: int = 8,
        window: int = DEFAULT_WINDOW,
    ):
        self.qspec = qspec
        self.max_degree = max_degree
        self.field = make_field(qspec)
        self.qclass = self.field.classify()
        self.algebra = ZigzagAlgebra(self.field)
        self.resolution = MinimalResolution(self.algebra)
        self.complexes = HochschildComplexes(self.resolution)
        self.comparison = Comparison(self.resolution)
        self.cup_product = CupProduct(self.complexes, max_degree)
        self.presentation = presentation(self.field)
        self.ring = RingStructure(self.cup_product, self.presentation)
        self.bv_operator = BVOperator(self.comparison, self.cup_product)
        self.oracle = BarOracle(self.comparison, self.complexes, window)
        self.tables = BVTables(self.bv_operator, self.ring, self.oracle)
        logger.info(f"Calculator for q {qspec} ({self.qclass})")

    def _degree_check(self, m: int):
        if m < 0 or m > self.max_degree:
            raise DegreeOutOfRange(
                f"Degree {m} outside 0..{self.max_degree}; raise --max."
            )

    def dims(self, max_degree: Optional[int] = None) -> List[DimsRow]:
        """Dimensions for 0 <= m <= max_degree (defaults to the calculator
        maximum)."""
        top = self.max_degree if max_degree is None else max_degree
        self.complexes.precompute(top)
        qclass = self.qclass
        rows = []
        for m in range(top + 1):
            rows.append(
                DimsRow(
                    m=m,
                    rank_tau=self.complexes.rank_tau(m),
                    rank_tau_expected=closed_forms.rank_tau(qclass, m),
                    rank_tau_printed=closed_forms.printed_rank_tau(qclass, m),
                    hh=self.complexes.hh_dim(m),
                    hh_expected=closed_forms.hh_dim(qclass, m),
                    hh_codim=self.complexes.hh_codim(m),
                    hh_codim_expected=closed_forms.hh_codim(qclass, m),
                    hc=self.complexes.hc_dim(m),
                    hc_expected=closed_forms.hc_dim(qclass, m),
                    hc_printed=closed_forms.printed_hc_dim(qclass, m),
                )
            )
        return rows

    def basis(self, m: int) -> List[HHClass]:
        """Canonical basis of HH^m."""
        self._degree_check(m)
        return self.complexes.hh_basis(m)

    def resolve(self, name: Union[str, HHClass]) -> HHClass:
        """Class named by a generator monomial (`u1*w0`, `1`) or by
        `hh:m:n`, the n-th canonical basis class of HH^m.

        :raises UnknownClass: for an unknown name.
        :raises DegreeOutOfRange: for a degree above the maximum.
        """
        if isinstance(name, HHClass):
            return name
        text = name.strip()
        if text.startswith("hh:"):
            try:
                _, m, n = text.split(":")
                m, n = int(m), int(n)
            except ValueError as error:
                raise UnknownClass(
                    f"{text!r} should read hh:<degree>:<index>."
                ) from error
            basis = self.basis(m)
            if not 0 <= n < len(basis):
                raise UnknownClass(
                    f"HH^{m} has dimension {len(basis)}; no class {n}."
                )
            return basis[n]
        monomial = parse_monomial(text)
        self._degree_check(self.presentation.degree(monomial))
        return self.ring.monomial_class(monomial)

    def cup(self, x: Union[str, HHClass], y: Union[str, HHClass]) -> HHClass:
        return self.cup_product.cup(self.resolve(x), self.resolve(y))

    def bv(self, x: Union[str, HHClass]) -> HHClass:
        return self.bv_operator.delta(self.resolve(x))

    def bracket(
        self, x: Union[str, HHClass], y: Union[str, HHClass]
    ) -> HHClass:
        return self.bv_operator.bracket(self.resolve(x), self.resolve(y))

    def render(self, x: HHClass) -> str:
        """z/u/w notation when available, pair notation otherwise."""
        return self.ring.render(x)

    def render_pairs(self, x: HHClass) -> str:
        if x.is_zero:
            return "0"
        return self.complexes.class_to_str(x)
