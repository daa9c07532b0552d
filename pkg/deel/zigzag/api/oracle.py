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
This module implements an independent ground truth for low degrees: the
reduced bar cochain complex of the zigzag algebra with its Hochschild
differential, cup product, circle products and Gerstenhaber bracket.
Classes move between the minimal resolution and the bar side by composing
with the comparison morphisms, c ↦ c∘Ψ and F ↦ F∘Φ.

Bar cochains of degree m are keyed by composable words of m radical basis
elements. In degree 0 the key is the 1-tuple of a vertex idempotent.
"""
import logging
from dataclasses import dataclass
from dataclasses import field
from typing import Dict
from typing import List
from typing import Optional
from typing import Tuple

from deel.zigzag.api.algebra import AlgElem
from deel.zigzag.api.algebra import Basis
from deel.zigzag.api.algebra import e
from deel.zigzag.api.algebra import is_idempotent
from deel.zigzag.api.algebra import source
from deel.zigzag.api.algebra import target
from deel.zigzag.api.comparison import Comparison
from deel.zigzag.api.complexes import Cochain
from deel.zigzag.api.complexes import HHClass
from deel.zigzag.api.complexes import HochschildComplexes
from deel.zigzag.api.linalg import SparseMatrix
from deel.zigzag.api.linalg import Vector
from deel.zigzag.api.resolution import Word
from deel.zigzag.api.resolution import generators
from deel.zigzag.api.resolution import reduced_words
from deel.zigzag.api.utils import DegreeMismatch
from deel.zigzag.api.utils import accumulate
from deel.zigzag.api.utils import add_scaled
from deel.zigzag.api.utils import degree_check
from deel.zigzag.api.utils import window_check

logger = logging.getLogger(__name__)

DEFAULT_WINDOW = 7


@dataclass
class BarCochain:
    """Reduced bar cochain: word ↦ value in e_o A e_t.

    :param int degree: number of arguments.
    :param dict values: nonzero values by word.
    """

    degree: int
    values: Dict[Word, AlgElem] = field(default_factory=dict)

    def at(self, word: Word) -> AlgElem:
        return self.values.get(word, {})


def vertex_word(v: int) -> Word:
    return (e(v),)


def bar_words(m: int) -> List[Word]:
    """Keys of degree m bar cochains; the vertex words when m = 0."""
    degree_check(m)
    if m == 0:
        return [vertex_word(1), vertex_word(2)]
    return reduced_words(m)


def parallel_basis(word: Word) -> List[Basis]:
    """Basis elements running from the start to the end of `word`."""
    start, end = source(word[0]), target(word[-1])
    return [b for b in Basis if source(b) == start and target(b) == end]


def _split(word: Word, n: int, side: str) -> Word:
    """Prefix (side "head") or suffix (side "tail") of `word` with n
    letters; the empty piece becomes the vertex word at the cut."""
    if side == "head":
        piece = word[:n]
        return piece if piece else vertex_word(source(word[0]))
    piece = word[len(word) - n :] if n else ()
    return piece if piece else vertex_word(target(word[-1]))


class BarOracle:
    """Hochschild structure computed on the reduced bar complex.

    :param Comparison comparison: comparison morphisms to the minimal
        resolution.
    :param HochschildComplexes complexes: cochain complexes used to reduce
        transported classes.
    :param int window: largest supported cochain degree.

    .. code-block:: python

        from deel.zigzag.api.scalars import QSpec, make_field
        from deel.zigzag.api.algebra import ZigzagAlgebra
        from deel.zigzag.api.resolution import MinimalResolution
        from deel.zigzag.api.comparison import Comparison
        from deel.zigzag.api.complexes import HochschildComplexes
        from deel.zigzag.api.oracle import BarOracle

        algebra = ZigzagAlgebra(make_field(QSpec.rational(-1)))
        resolution = MinimalResolution(algebra)
        oracle = BarOracle(
            Comparison(resolution), HochschildComplexes(resolution)
        )
        print(oracle.hh_dim_oracle(2))  # 6
    """

    def __init__(
        self,
        comparison: Comparison,
        complexes: HochschildComplexes,
        window: int = DEFAULT_WINDOW,
    ):
        self.comparison = comparison
        self.complexes = complexes
        self.resolution = comparison.resolution
        self.algebra = comparison.algebra
        self.k = comparison.k
        self.window = window
        self._words: Dict[int, List[Word]] = {}
        self._basis: Dict[int, List[Tuple[Word, Basis]]] = {}
        self._ranks: Dict[int, int] = {}

    def words(self, m: int) -> List[Word]:
        found = self._words.get(m)
        if found is None:
            found = bar_words(m)
            self._words[m] = found
            logger.debug(f"{len(found)} bar words of length {m}")
        return found

    def cochain_basis(self, m: int) -> List[Tuple[Word, Basis]]:
        """Pairs (word, b) with b parallel to word; 4·3^m of them."""
        found = self._basis.get(m)
        if found is None:
            found = [(w, b) for w in self.words(m) for b in parallel_basis(w)]
            self._basis[m] = found
        return found

    def _left(self, a: Basis, x: AlgElem) -> AlgElem:
        return self.algebra.multiply({a: self.k.one}, x)

    def _right(self, x: AlgElem, a: Basis) -> AlgElem:
        return self.algebra.multiply(x, {a: self.k.one})

    def bar_delta(self, f: BarCochain) -> BarCochain:
        """Hochschild differential

        δf(a1, ..., a_m+1) = a1·f(a2, ...) + Σ (-1)^i f(..., a_i a_i+1, ...)
        + (-1)^{m+1} f(..., a_m)·a_m+1.
        """
        m = f.degree
        k = self.k
        result = BarCochain(m + 1)
        for word in self.words(m + 1):
            value: AlgElem = {}
            tail = f.at(_split(word, m, "tail"))
            add_scaled(value, self._left(word[0], tail), k.one)
            for i in range(1, m + 1):
                product = self.algebra.basis_product(word[i - 1], word[i])
                if product is None:
                    continue
                merged = word[: i - 1] + (product[0],) + word[i + 1 :]
                add_scaled(value, f.at(merged), k.sign(i) * product[1])
            add_scaled(
                value,
                self._right(f.at(_split(word, m, "head")), word[-1]),
                k.sign(m + 1),
            )
            if value:
                result.values[word] = value
        return result

    def delta_matrix(self, m: int) -> SparseMatrix:
        """Matrix of δ^m on the parallel-pair bases, assembled row word by
        row word."""
        window_check(m, self.window)
        k = self.k
        cols = self.cochain_basis(m)
        col_index = {pair: n for n, pair in enumerate(cols)}
        rows = self.cochain_basis(m + 1)
        row_index = {pair: n for n, pair in enumerate(rows)}
        columns: List[Vector] = [{} for _ in cols]

        def add(row_word: Word, col_word: Word, value: AlgElem, c, b: Basis):
            for out, cv in value.items():
                accumulate(
                    columns[col_index[(col_word, b)]],
                    row_index[(row_word, out)],
                    c * cv,
                )

        for word in self.words(m + 1):
            tail = _split(word, m, "tail")
            for b in parallel_basis(tail):
                add(word, tail, self._left(word[0], {b: k.one}), k.one, b)
            for i in range(1, m + 1):
                product = self.algebra.basis_product(word[i - 1], word[i])
                if product is None:
                    continue
                merged = word[: i - 1] + (product[0],) + word[i + 1 :]
                for b in parallel_basis(merged):
                    add(word, merged, {b: k.one}, k.sign(i) * product[1], b)
            head = _split(word, m, "head")
            for b in parallel_basis(head):
                value = self._right({b: k.one}, word[-1])
                add(word, head, value, k.sign(m + 1), b)
        return SparseMatrix(k, rows, cols, columns)

    def rank_delta(self, m: int) -> int:
        if m < 0:
            return 0
        if m not in self._ranks:
            self._ranks[m] = self.delta_matrix(m).rank()
            logger.info(f"rank delta^{m} = {self._ranks[m]} on the bar side")
        return self._ranks[m]

    def hh_dim_oracle(self, m: int) -> int:
        """dim HH^m = dim ker δ^m - rank δ^{m-1} on the reduced cochains.

        :raises WindowExceeded: when m exceeds the window.
        """
        degree_check(m)
        window_check(m, self.window)
        return (
            len(self.cochain_basis(m))
            - self.rank_delta(m)
            - self.rank_delta(m - 1)
        )

    def transport_from(self, x: Cochain, m: int) -> BarCochain:
        """Bar cochain x∘Ψ_m of a minimal-resolution cochain."""
        window_check(m, self.window)
        result = BarCochain(m)
        for word in self.words(m):
            if m == 0:
                psi = self.comparison.psi_word(0, (), source(word[0]))
            else:
                psi = self.comparison.psi_word(m, word)
            value = self.complexes.evaluate(x, psi)
            if value:
                result.values[word] = value
        return result

    def transport_to(self, f: BarCochain) -> Cochain:
        """Minimal-resolution cochain f∘Φ_m of a bar cochain."""
        m = f.degree
        result: Cochain = {}
        for g in generators(m):
            for word, c in self.resolution.g_tensor(g):
                key = word if word else vertex_word(g.origin)
                for b, cb in f.at(key).items():
                    accumulate(result, (b, g), c * cb)
        return result

    def cup_bar(self, f: BarCochain, g: BarCochain) -> BarCochain:
        """(f ⊔ g)(a1, ..., a_m+l) = f(a1, ..., a_m)·g(a_m+1, ..., a_m+l)."""
        m, l = f.degree, g.degree
        result = BarCochain(m + l)
        for word in self.words(m + l):
            if m + l == 0:
                head = tail = word
            else:
                head = _split(word, m, "head")
                tail = _split(word, l, "tail")
            value = self.algebra.multiply(f.at(head), g.at(tail))
            if value:
                result.values[word] = value
        return result

    def circle_i(self, f: BarCochain, i: int, g: BarCochain) -> BarCochain:
        """Substitution of g into the i-th argument of f.

        With l = 0 the value of g at the vertex between a_{i-1} and a_i is
        inserted as a new argument. Idempotent components of inserted
        values vanish.
        """
        m, l = f.degree, g.degree
        if not 1 <= i <= m:
            raise DegreeMismatch(f"Position {i} outside 1..{m}.")
        n = m + l - 1
        result = BarCochain(n)
        for word in self.words(n):
            if l == 0:
                if n == 0:
                    v = source(word[0])
                elif i <= n:
                    v = source(word[i - 1])
                else:
                    v = target(word[-1])
                inner = g.at(vertex_word(v))
                before = word[: i - 1] if n else ()
                after = word[i - 1 :] if n else ()
            else:
                inner = g.at(word[i - 1 : i - 1 + l])
                before, after = word[: i - 1], word[i - 1 + l :]
            value: AlgElem = {}
            for b, c in inner.items():
                if is_idempotent(b):
                    continue
                add_scaled(value, f.at(before + (b,) + after), c)
            if value:
                result.values[word] = value
        return result

    def circle(self, f: BarCochain, g: BarCochain) -> BarCochain:
        """f ∘ g = Σ_i (-1)^{(l-1)(i-1)} f ∘_i g, zero when f has degree 0."""
        m, l = f.degree, g.degree
        n = m + l - 1
        result = BarCochain(max(n, 0))
        for i in range(1, m + 1):
            part = self.circle_i(f, i, g)
            sign = self.k.sign((l - 1) * (i - 1))
            for word, value in part.values.items():
                merged = result.values.setdefault(word, {})
                add_scaled(merged, value, sign)
                if not merged:
                    del result.values[word]
        return result

    def bracket_bar(self, f: BarCochain, g: BarCochain) -> BarCochain:
        """[f, g] = f ∘ g - (-1)^{(m-1)(l-1)} g ∘ f."""
        m, l = f.degree, g.degree
        left = self.circle(f, g)
        right = self.circle(g, f)
        sign = -self.k.sign((m - 1) * (l - 1))
        for word, value in right.values.items():
            merged = left.values.setdefault(word, {})
            add_scaled(merged, value, sign)
            if not merged:
                del left.values[word]
        return left

    def _class(self, f: BarCochain) -> HHClass:
        return self.complexes.classify(f.degree, self.transport_to(f))

    def cup_oracle(self, x: HHClass, y: HHClass) -> HHClass:
        """Cup product of two classes computed on the bar side.

        :raises WindowExceeded: when the product degree exceeds the window.
        """
        window_check(x.degree + y.degree, self.window)
        f = self.transport_from(x.representative, x.degree)
        g = self.transport_from(y.representative, y.degree)
        return self._class(self.cup_bar(f, g))

    def bracket_oracle(self, x: HHClass, y: HHClass) -> HHClass:
        """Gerstenhaber bracket of two classes from circle products.

        :returns: the class of degree |x| + |y| - 1; for two degree-0
            classes the zero class of degree -1.
        :rtype: HHClass

        :raises WindowExceeded: when |x| + |y| - 1 exceeds the window.
        """
        n = x.degree + y.degree - 1
        if n < 0:
            return HHClass(-1, {}, ())
        window_check(max(x.degree, y.degree, n), self.window)
        f = self.transport_from(x.representative, x.degree)
        g = self.transport_from(y.representative, y.degree)
        return self._class(self.bracket_bar(f, g))

    def combination_class(self, ring, terms, degree: int) -> HHClass:
        """Class of a combination of generator monomials of a
        :class:`deel.zigzag.api.products.RingStructure`, with every product
        taken on the bar side."""
        coordinates = [self.k.zero] * len(self.complexes.quotient(degree))
        for c, monomial in terms:
            value: Optional[HHClass] = None
            for name in monomial:
                factor = ring.generator_class(name)
                value = (
                    factor if value is None else self.cup_oracle(value, factor)
                )
            if value is None:
                value = ring.monomial_class(())
            for n, x in enumerate(value.coordinates):
                coordinates[n] += c * x
        return self.complexes.from_coordinates(degree, coordinates)

    def round_trip(self, x: HHClass) -> HHClass:
        """Class of x∘Ψ_m∘Φ_m, equal to x."""
        return self._class(self.transport_from(x.representative, x.degree))
