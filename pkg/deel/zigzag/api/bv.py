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
This module implements the Batalin-Vilkovisky operator Δ on the Hochschild
cohomology of the zigzag algebra, the Gerstenhaber bracket it induces,
and the checks of the BV and bracket tables of each case of q.

A cocycle c of degree m is moved to the bar side as F = c∘Ψ_m; Δ is the
cyclic-sum formula applied to F, then read back on the minimal resolution
through Φ_{m-1}. When q = -1 the algebra is symmetric and the sum runs over
the radical basis with the symmetric duals b*; otherwise it runs over the
idempotents and arrows, inserting their duals b̃ and twisting wrapped
arguments by the Nakayama automorphism.
"""
import logging
from dataclasses import dataclass
from typing import Dict
from typing import List
from typing import Optional
from typing import Tuple

from deel.zigzag.api.algebra import AlgElem
from deel.zigzag.api.algebra import Basis
from deel.zigzag.api.algebra import NON_IDEMPOTENTS
from deel.zigzag.api.algebra import is_arrow
from deel.zigzag.api.algebra import is_idempotent
from deel.zigzag.api.algebra import source
from deel.zigzag.api.algebra import target
from deel.zigzag.api.comparison import Comparison
from deel.zigzag.api.complexes import Cochain
from deel.zigzag.api.complexes import HHClass
from deel.zigzag.api.linalg import Echelon
from deel.zigzag.api.products import CupProduct
from deel.zigzag.api.products import RingStructure
from deel.zigzag.api.products import class_vector
from deel.zigzag.api.presentations import Combination
from deel.zigzag.api.presentations import monomial_to_str
from deel.zigzag.api.resolution import GenIdx
from deel.zigzag.api.resolution import Word
from deel.zigzag.api.resolution import generators
from deel.zigzag.api.resolution import is_composable
from deel.zigzag.api.scalars import Scalar
from deel.zigzag.api.utils import DegreeZero
from deel.zigzag.api.utils import WindowExceeded
from deel.zigzag.api.utils import accumulate

logger = logging.getLogger(__name__)

# (inserted basis element, its scalar, output basis element)
Insertion = Tuple[Basis, Scalar, Basis]


class BVOperator:
    """BV operator and Gerstenhaber bracket on HH*(A_q).

    :param Comparison comparison: homotopies and comparison morphisms.
    :param CupProduct cup: cup product on the same cochain complexes.

    .. code-block:: python

        from deel.zigzag.api.scalars import QSpec, make_field
        from deel.zigzag.api.algebra import ZigzagAlgebra
        from deel.zigzag.api.resolution import MinimalResolution
        from deel.zigzag.api.comparison import Comparison
        from deel.zigzag.api.complexes import HochschildComplexes
        from deel.zigzag.api.products import CupProduct
        from deel.zigzag.api.bv import BVOperator

        algebra = ZigzagAlgebra(make_field(QSpec.rational(-1)))
        resolution = MinimalResolution(algebra)
        complexes = HochschildComplexes(resolution)
        bv = BVOperator(Comparison(resolution), CupProduct(complexes))
    """

    def __init__(self, comparison: Comparison, cup: CupProduct):
        self.comparison = comparison
        self.cup = cup
        self.complexes = cup.complexes
        self.resolution = comparison.resolution
        self.algebra = comparison.algebra
        self.k = comparison.k
        self.symmetric = self.k.is_zero(self.k.q + self.k.one)
        self.insertions = self._insertions()

    def _insertions(self) -> List[Insertion]:
        if self.symmetric:
            return [
                (b, self.k.one, self.algebra.star(b)) for b in NON_IDEMPOTENTS
            ]
        insertions = []
        for b in Basis:
            if is_idempotent(b) or is_arrow(b):
                dual, c = self.algebra.tilde_basis(b)
                insertions.append((dual, c, b))
        return insertions

    def bar_value(self, x: Cochain, word: Word) -> AlgElem:
        """F(word) = x(Ψ(e ⊗̄ word ⊗̄ e)), zero on non-composable words."""
        if not is_composable(word):
            return {}
        psi = self.comparison.psi_word(len(word), word)
        return self.complexes.evaluate(x, psi)

    def _cyclic_sum(
        self, x: Cochain, seq: Word, g: GenIdx, memo: Dict[Word, Scalar]
    ) -> AlgElem:
        """ΔF(seq) restricted to e_o(g) A e_t(g)."""
        k = self.k
        n = len(seq) + 1
        result: AlgElem = {}
        for inserted, scalar, out in self.insertions:
            if source(out) != g.origin or target(out) != g.target:
                continue
            total = k.zero
            for i in range(1, n + 1):
                wrapped = seq[: i - 1]
                word = seq[i - 1 :] + (inserted,) + wrapped
                if not is_composable(word):
                    continue
                c = scalar * k.sign(i * (n - 1))
                if not self.symmetric:
                    for a in wrapped:
                        c = c * self.algebra.nakayama_scalar(a)
                trace = memo.get(word)
                if trace is None:
                    trace = self.algebra.trace(self.bar_value(x, word))
                    memo[word] = trace
                total = total + c * trace
            accumulate(result, out, total)
        return result

    def delta_cochain(self, x: Cochain, m: int) -> Cochain:
        """Δ on the cochain level, [Δ(x∘Ψ_m)∘Φ_{m-1}].

        :param Cochain x: cocycle of degree m >= 1.
        :param int m: degree of `x`.

        :returns: a cocycle of degree m - 1.
        :rtype: Cochain
        """
        if m == 0:
            raise DegreeZero("The BV operator lowers the degree of m >= 1.")
        result: Cochain = {}
        memo: Dict[Word, Scalar] = {}
        for g in generators(m - 1):
            for seq, c in self.resolution.g_tensor(g):
                for out, value in self._cyclic_sum(x, seq, g, memo).items():
                    accumulate(result, (out, g), c * value)
        logger.debug(
            f"Delta in degree {m} used {len(memo)} words, Psi memo "
            f"{self.comparison.memo_size}"
        )
        return result

    def delta(self, x: HHClass) -> HHClass:
        """BV operator on a class.

        :raises DegreeZero: for a class of degree 0.
        """
        if x.degree == 0:
            raise DegreeZero("The BV operator is not defined on HH^0.")
        value = self.delta_cochain(x.representative, x.degree)
        return self.complexes.classify(x.degree - 1, value)

    def delta_or_zero(self, x: HHClass) -> Optional[HHClass]:
        return None if x.degree == 0 else self.delta(x)

    def combine(
        self, degree: int, terms: List[Tuple[Scalar, Optional[HHClass]]]
    ) -> HHClass:
        coordinates = [self.k.zero] * len(self.complexes.quotient(degree))
        for c, value in terms:
            if value is None:
                continue
            for n, v in enumerate(value.coordinates):
                coordinates[n] += c * v
        return self.complexes.from_coordinates(degree, coordinates)

    def bracket(self, x: HHClass, y: HHClass) -> HHClass:
        """Gerstenhaber bracket from the BV identity

        [a, b] = -(-1)^{(|a|-1)|b|} (Δ(a⊔b) - Δ(a)⊔b - (-1)^{|a|} a⊔Δ(b)).

        :returns: the class of degree |x| + |y| - 1; for two degree-0
            classes the zero class of degree -1.
        :rtype: HHClass
        """
        a, b = x.degree, y.degree
        if a + b == 0:
            return HHClass(-1, {}, ())
        k = self.k
        da, db = self.delta_or_zero(x), self.delta_or_zero(y)
        terms = [
            (k.one, self.delta(self.cup.cup(x, y))),
            (-k.one, None if da is None else self.cup.cup(da, y)),
            (-k.sign(a), None if db is None else self.cup.cup(x, db)),
        ]
        value = self.combine(a + b - 1, terms)
        factor = -k.sign((a - 1) * b)
        return self.complexes.from_coordinates(
            a + b - 1, [factor * c for c in value.coordinates]
        )


@dataclass
class TableStatus:
    """One BV or bracket table entry against its computed value.

    `kind` is "bv" or "bracket"; `oracle` holds the bar-side value when a
    mismatch was re-derived there.
    """

    kind: str
    name: str
    expected: str
    computed: str
    status: str
    oracle: Optional[str] = None


class BVTables:
    """Checks of the BV and bracket tables of a ring presentation.

    :param BVOperator bv: the BV operator.
    :param RingStructure ring: presentation evaluated through the cup
        product.
    :param oracle: optional :class:`deel.zigzag.api.oracle.BarOracle` used
        to re-derive mismatches.
    """

    def __init__(self, bv: BVOperator, ring: RingStructure, oracle=None):
        self.bv = bv
        self.ring = ring
        self.oracle = oracle
        self.k = bv.k

    def expected_class(self, terms: Combination, degree: int) -> HHClass:
        if not terms:
            return self.bv.complexes.zero_class(degree)
        return self.ring.combination_class(terms, degree)

    def _status(self, expected: HHClass, computed: HHClass) -> str:
        same = expected.coordinates == computed.coordinates
        return "pass" if same else "fail"

    def _oracle_bracket(self, x: HHClass, y: HHClass) -> Optional[HHClass]:
        if self.oracle is None:
            return None
        try:
            return self.oracle.bracket_oracle(x, y)
        except WindowExceeded:
            return None

    def _oracle_delta(self, names: Tuple[str, ...]) -> Optional[HHClass]:
        """Δ(ab) from an oracle bracket through the BV identity."""
        if len(names) != 2:
            return None
        x, y = (self.ring.generator_class(name) for name in names)
        bracket = self._oracle_bracket(x, y)
        if bracket is None:
            return None
        a, b = x.degree, y.degree
        k = self.k
        da, db = self.bv.delta_or_zero(x), self.bv.delta_or_zero(y)
        return self.bv.combine(
            a + b - 1,
            [
                (-k.sign((a - 1) * b), bracket),
                (k.one, None if da is None else self.bv.cup.cup(da, y)),
                (k.sign(a), None if db is None else self.bv.cup.cup(x, db)),
            ],
        )

    def check_delta(self, degree_bound: int) -> List[TableStatus]:
        """Δ on generators and products of two generators of degree <=
        degree_bound, against the table (unlisted values are zero)."""
        presentation = self.ring.presentation
        statuses = []
        for monomial in presentation.table_products(degree_bound):
            degree = presentation.degree(monomial) - 1
            expected = self.expected_class(
                presentation.bv_table.get(monomial, ()), degree
            )
            computed = self.bv.delta(self.ring.monomial_class(monomial))
            status = TableStatus(
                "bv",
                f"Delta({monomial_to_str(monomial)})",
                self.ring.render(expected),
                self.ring.render(computed),
                self._status(expected, computed),
            )
            if status.status == "fail":
                oracle_value = self._oracle_delta(monomial)
                if oracle_value is not None:
                    status.oracle = self.ring.render(oracle_value)
                logger.warning(
                    f"{status.name}: table {status.expected}, computed "
                    f"{status.computed}, oracle {status.oracle}"
                )
            statuses.append(status)
        return statuses

    def check_brackets(self, degree_bound: int) -> List[TableStatus]:
        """Brackets of generator pairs whose product has degree <=
        degree_bound, against the table."""
        presentation = self.ring.presentation
        statuses = []
        for a, b in presentation.bracket_pairs(degree_bound - 1):
            x, y = self.ring.generator_class(a), self.ring.generator_class(b)
            degree = x.degree + y.degree - 1
            expected = self.expected_class(
                presentation.bracket_table.get((a, b), ()), degree
            )
            computed = self.bv.bracket(x, y)
            status = TableStatus(
                "bracket",
                f"[{a}, {b}]",
                self.ring.render(expected),
                self.ring.render(computed),
                self._status(expected, computed),
            )
            if status.status == "fail":
                oracle_value = self._oracle_bracket(x, y)
                if oracle_value is not None:
                    status.oracle = self.ring.render(oracle_value)
                logger.warning(
                    f"{status.name}: table {status.expected}, computed "
                    f"{status.computed}, oracle {status.oracle}"
                )
            statuses.append(status)
        return statuses

    def verify_bv_tables(self, degree_bound: int) -> List[TableStatus]:
        """All BV and bracket entries up to the degree bound."""
        statuses = self.check_delta(degree_bound)
        return statuses + self.check_brackets(degree_bound)


@dataclass
class IdealReport:
    """Dimensions of HH*/𝒢 per degree, 𝒢 the closure of the nilpotent
    ideal under cup and bracket."""

    computed: List[int]

    @property
    def expected(self) -> List[int]:
        return [1] + [0] * (len(self.computed) - 1)

    @property
    def ok(self) -> bool:
        return self.computed == self.expected


def gerstenhaber_ideal_quotient(
    bv: BVOperator, ring: RingStructure, degree_bound: int
) -> IdealReport:
    """Close the ideal generated by the nilpotent generators under cup and
    bracket with generators, within degrees <= degree_bound.

    Bracketing with generators suffices: the bracket is a derivation of the
    cup product in each argument.
    """
    complexes = bv.complexes
    cup = bv.cup
    names = ring.presentation.names
    spaces = {m: Echelon(bv.k) for m in range(degree_bound + 1)}
    pending: List[HHClass] = []

    def add(x: HHClass):
        if 0 <= x.degree <= degree_bound and spaces[x.degree].add(
            class_vector(x)
        ):
            pending.append(x)

    for name in ring.presentation.nilpotent_names():
        add(ring.generator_class(name))
    while pending:
        x = pending.pop()
        for name in names:
            y = ring.generator_class(name)
            if x.degree + y.degree <= degree_bound:
                add(cup.cup(x, y))
            if 0 <= x.degree + y.degree - 1 <= degree_bound:
                add(bv.bracket(x, y))
    computed = [
        len(complexes.quotient(m)) - len(spaces[m])
        for m in range(degree_bound + 1)
    ]
    logger.info(f"Quotient by the Gerstenhaber ideal: {computed}")
    return IdealReport(computed)
