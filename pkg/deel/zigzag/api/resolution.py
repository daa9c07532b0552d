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
This module implements the minimal projective bimodule resolution P of the
zigzag algebra, whose degree m free generators are the symbols f^m_(i,j),
and the bar-side tensors g^m_(i,j) that embed it into the reduced bar
resolution.

Elements of P_m are sparse maps over triples (left, generator, right) of a
left basis element, a generator and a right basis element. Chains of the
reduced bar resolution are sparse maps over tuples (a0, a1, ..., am, a_m+1)
whose inner entries are non-idempotent basis elements.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict
from typing import List
from typing import Tuple

from deel.zigzag.api.algebra import Basis
from deel.zigzag.api.algebra import NON_IDEMPOTENTS
from deel.zigzag.api.algebra import ZigzagAlgebra
from deel.zigzag.api.algebra import alpha
from deel.zigzag.api.algebra import beta
from deel.zigzag.api.algebra import e
from deel.zigzag.api.algebra import source
from deel.zigzag.api.algebra import target
from deel.zigzag.api.scalars import Scalar
from deel.zigzag.api.utils import DegreeMismatch
from deel.zigzag.api.utils import accumulate
from deel.zigzag.api.utils import degree_check
from deel.zigzag.api.utils import vertex

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class GenIdx:
    """Index of the generator f^m_(i,j).

    The vertex `i` is normalized to {1, 2}. Indices with `j < 0` or `j > m`
    are kept as the zero symbol.
    """

    m: int
    i: int
    j: int

    def __post_init__(self):
        object.__setattr__(self, "i", vertex(self.i))

    @property
    def is_zero(self) -> bool:
        return self.j < 0 or self.j > self.m

    @property
    def origin(self) -> int:
        return self.i

    @property
    def target(self) -> int:
        return vertex(self.i + self.m)

    def __str__(self) -> str:
        return f"f{self.m}_({self.i},{self.j})"


PKey = Tuple[Basis, GenIdx, Basis]
PElem = Dict[PKey, Scalar]
BarChain = Dict[Tuple[Basis, ...], Scalar]
Word = Tuple[Basis, ...]


def gen_target(g: GenIdx) -> int:
    """Terminal vertex t(f^m_(i,j)) = i + m mod 2."""
    return g.target


def generators(m: int) -> List[GenIdx]:
    """The 2(m+1) generators of degree m, ordered by j then by vertex."""
    degree_check(m)
    return [GenIdx(m, i, j) for j in range(m + 1) for i in (1, 2)]


def generator_element(g: GenIdx, c: Scalar) -> PElem:
    """The free generator o(g) ⊗ t(g) scaled by `c`."""
    return {(e(g.origin), g, e(g.target)): c}


def p_basis(m: int) -> List[PKey]:
    """k-basis of P_m: triples (l, g, r) with l ending at o(g) and r
    starting at t(g)."""
    return [
        (left, g, right)
        for g in generators(m)
        for left in Basis
        if target(left) == g.origin
        for right in Basis
        if source(right) == g.target
    ]


def is_composable(word: Word) -> bool:
    return all(target(a) == source(b) for a, b in zip(word, word[1:]))


def reduced_words(m: int) -> List[Word]:
    """Composable words of `m` non-idempotent basis elements."""
    words: List[Word] = [()]
    for _ in range(m):
        words = [
            w + (b,)
            for w in words
            for b in NON_IDEMPOTENTS
            if not w or target(w[-1]) == source(b)
        ]
    return words


class MinimalResolution:
    """The minimal resolution P = (P_m, d_m) of A_q as a bimodule.

    :param ZigzagAlgebra algebra: the algebra being resolved.

    .. code-block:: python

        from deel.zigzag.api.scalars import QSpec, make_field
        from deel.zigzag.api.algebra import ZigzagAlgebra
        from deel.zigzag.api.resolution import GenIdx, MinimalResolution

        algebra = ZigzagAlgebra(make_field(QSpec.generic()))
        resolution = MinimalResolution(algebra)

        # d(f1_(1,1)) = a1 ⊗ e2 - e1 ⊗ a1
        print(resolution.d_generator(GenIdx(1, 1, 1)))
    """

    def __init__(self, algebra: ZigzagAlgebra):
        self.algebra = algebra
        self.k = algebra.k
        self.d_generator = lru_cache(maxsize=None)(self._d_generator)
        self.g_tensor = lru_cache(maxsize=None)(self._g_tensor)
        self.right_g_tensor = lru_cache(maxsize=None)(self._right_g_tensor)

    def _d_generator(self, g: GenIdx) -> Tuple[Tuple[PKey, Scalar], ...]:
        """Image of the free generator of `g` under d_m, as (key, scalar)
        pairs."""
        k = self.k
        m, i, j = g.m, g.i, g.j
        sign = k.sign(m)
        terms: PElem = {}

        def add(left: Basis, h: GenIdx, right: Basis, c: Scalar):
            if not h.is_zero:
                accumulate(terms, (left, h, right), c)

        h = GenIdx(m - 1, i + 1, j - 1)
        add(alpha(i), h, e(h.target), k.one)
        h = GenIdx(m - 1, i, j - 1)
        add(e(i), h, alpha(i - m - 1), sign * k.q_pow(m - j))
        h = GenIdx(m - 1, i - 1, j)
        add(beta(i - 1), h, e(h.target), k.q_pow(j))
        h = GenIdx(m - 1, i, j)
        add(e(i), h, beta(i - m), sign)
        return tuple(terms.items())

    def act(self, left: Basis, x: PElem, right: Basis) -> PElem:
        """Bimodule action left · x · right on basis elements."""
        algebra = self.algebra
        result: PElem = {}
        for (l, g, r), c in x.items():
            lp = algebra.basis_product(left, l)
            if lp is None:
                continue
            rp = algebra.basis_product(r, right)
            if rp is None:
                continue
            accumulate(result, (lp[0], g, rp[0]), c * lp[1] * rp[1])
        return result

    def apply_d(self, m: int, x: PElem) -> PElem:
        """Differential d_m: P_m → P_{m-1}, extended bimodule-linearly.

        :param int m: degree of `x`, at least 1.
        :param PElem x: element of P_m.

        :returns: d_m(x).
        :rtype: PElem

        :raises DegreeMismatch: when `x` has a generator of another degree.
        """
        degree_check(m, minimum=1)
        algebra = self.algebra
        result: PElem = {}
        for (left, g, right), c in x.items():
            if g.m != m:
                raise DegreeMismatch(
                    f"d_{m} applied to a generator of degree {g.m}."
                )
            for (l, h, r), ch in self.d_generator(g):
                lp = algebra.basis_product(left, l)
                if lp is None:
                    continue
                rp = algebra.basis_product(r, right)
                if rp is None:
                    continue
                accumulate(result, (lp[0], h, rp[0]), c * ch * lp[1] * rp[1])
        return result

    def augment(self, x: PElem) -> Dict[Basis, Scalar]:
        """Multiplication map P_0 → A_q, (l, f0_i, r) ↦ l·r."""
        result: Dict[Basis, Scalar] = {}
        for (left, g, right), c in x.items():
            if g.m != 0:
                raise DegreeMismatch(
                    f"Augmentation applied to a generator of degree {g.m}."
                )
            product = self.algebra.basis_product(left, right)
            if product is not None:
                accumulate(result, product[0], c * product[1])
        return result

    def _g_tensor(self, g: GenIdx) -> Tuple[Tuple[Word, Scalar], ...]:
        """Bar-side tensor g^m_(i,j) as (word, scalar) pairs, built with the
        left recursion α_i ⊗̄ g^{m-1}_(i+1,j-1) + q^j β_{i-1} ⊗̄
        g^{m-1}_(i-1,j)."""
        if g.is_zero:
            return ()
        if g.m == 0:
            return (((), self.k.one),)
        m, i, j = g.m, g.i, g.j
        terms: Dict[Word, Scalar] = {}
        for word, c in self.g_tensor(GenIdx(m - 1, i + 1, j - 1)):
            accumulate(terms, (alpha(i),) + word, c)
        qj = self.k.q_pow(j)
        for word, c in self.g_tensor(GenIdx(m - 1, i - 1, j)):
            accumulate(terms, (beta(i - 1),) + word, qj * c)
        return tuple(terms.items())

    def _right_g_tensor(self, g: GenIdx) -> Tuple[Tuple[Word, Scalar], ...]:
        """Same tensor built with the right recursion q^{m-j}
        g^{m-1}_(i,j-1) ⊗̄ α_{i-m-1} + g^{m-1}_(i,j) ⊗̄ β_{i-m}."""
        if g.is_zero:
            return ()
        if g.m == 0:
            return (((), self.k.one),)
        m, i, j = g.m, g.i, g.j
        terms: Dict[Word, Scalar] = {}
        factor = self.k.q_pow(m - j)
        for word, c in self.right_g_tensor(GenIdx(m - 1, i, j - 1)):
            accumulate(terms, word + (alpha(i - m - 1),), factor * c)
        for word, c in self.right_g_tensor(GenIdx(m - 1, i, j)):
            accumulate(terms, word + (beta(i - m),), c)
        return tuple(terms.items())

    def phi(self, x: PElem) -> BarChain:
        """Comparison morphism Φ: P → B̄, (l, f, r) ↦ l ⊗̄ g ⊗̄ r."""
        result: BarChain = {}
        for (left, g, right), c in x.items():
            for word, cw in self.g_tensor(g):
                accumulate(result, (left,) + word + (right,), c * cw)
        return result

    def bar_d(self, x: BarChain) -> BarChain:
        """Differential of the reduced bar resolution.

        On a chain (a0, a1, ..., am, a_m+1) of degree m it is the
        alternating sum of the m+1 products of neighbours; products of two
        radical elements never give an idempotent, so the result stays
        reduced. In degree 0 it is the multiplication map, whose values are
        stored as 1-tuples.

        :param BarChain x: chain of degree m >= 0.

        :returns: chain of degree m-1.
        :rtype: BarChain
        """
        algebra = self.algebra
        result: BarChain = {}
        for key, c in x.items():
            m = len(key) - 2
            for position in range(m + 1):
                product = algebra.basis_product(
                    key[position], key[position + 1]
                )
                if product is None:
                    continue
                merged = key[:position] + (product[0],) + key[position + 2 :]
                sign = self.k.sign(position)
                accumulate(result, merged, sign * c * product[1])
        return result

    def bar_act(self, left: Basis, x: BarChain, right: Basis) -> BarChain:
        """Bimodule action on the outer factors of bar chains."""
        algebra = self.algebra
        result: BarChain = {}
        for key, c in x.items():
            lp = algebra.basis_product(left, key[0])
            if lp is None:
                continue
            rp = algebra.basis_product(key[-1], right)
            if rp is None:
                continue
            merged = (lp[0],) + key[1:-1] + (rp[0],)
            accumulate(result, merged, c * lp[1] * rp[1])
        return result
