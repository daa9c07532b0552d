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
This module implements the weak self-homotopies t of the minimal resolution
and s of the reduced bar resolution, and the comparison morphisms
Φ: P → B̄ and Ψ: B̄ → P between the two resolutions.
"""
import logging
import threading
from typing import Dict
from typing import Tuple

from deel.zigzag.api.algebra import AlgElem
from deel.zigzag.api.algebra import Basis
from deel.zigzag.api.algebra import alpha
from deel.zigzag.api.algebra import beta
from deel.zigzag.api.algebra import e
from deel.zigzag.api.algebra import is_idempotent
from deel.zigzag.api.algebra import loop
from deel.zigzag.api.algebra import source
from deel.zigzag.api.algebra import target
from deel.zigzag.api.resolution import BarChain
from deel.zigzag.api.resolution import GenIdx
from deel.zigzag.api.resolution import MinimalResolution
from deel.zigzag.api.resolution import PElem
from deel.zigzag.api.resolution import Word
from deel.zigzag.api.resolution import is_composable
from deel.zigzag.api.utils import DegreeMismatch
from deel.zigzag.api.utils import accumulate
from deel.zigzag.api.utils import add_scaled

logger = logging.getLogger(__name__)


class Comparison:
    """Homotopies and comparison morphisms attached to a minimal resolution.

    :param MinimalResolution resolution: the minimal resolution.

    Ψ is computed with the recursion Ψ_m = t_{m-1} ∘ Ψ_{m-1} ∘ d̄_m on the
    free generators e ⊗̄ a1 ⊗̄ ... ⊗̄ am ⊗̄ e of the reduced bar resolution,
    memoized per word. The memo is the only mutable state; inserts are
    serialized by a lock.

    .. code-block:: python

        from deel.zigzag.api.scalars import QSpec, make_field
        from deel.zigzag.api.algebra import Basis, ZigzagAlgebra
        from deel.zigzag.api.resolution import MinimalResolution
        from deel.zigzag.api.comparison import Comparison

        algebra = ZigzagAlgebra(make_field(QSpec.rational(-1)))
        comparison = Comparison(MinimalResolution(algebra))

        # Ψ2(e2 ⊗ b1 ⊗ a1 ⊗ e2) = q^-1 f2_(2,1)
        print(comparison.psi_word(2, (Basis.B1, Basis.A1)))
    """

    def __init__(self, resolution: MinimalResolution):
        self.resolution = resolution
        self.algebra = resolution.algebra
        self.k = resolution.k
        self._psi_memo: Dict[Tuple[int, Word], PElem] = {}
        self._lock = threading.Lock()

    def _t_generator(self, left: Basis, g: GenIdx) -> PElem:
        """t_m(left ⊗ t(g)) for a basis element ending at o(g)."""
        k = self.k
        m, i, j = g.m, g.i, g.j
        end = e(g.target)
        if is_idempotent(left):
            return {}
        if left == beta(i):
            return {(e(i + 1), GenIdx(m + 1, i + 1, j), end): k.q_pow(-j)}
        if left == alpha(i - 1):
            if j != m:
                return {}
            return {(e(i - 1), GenIdx(m + 1, i - 1, m + 1), end): k.one}
        if left != loop(i):
            raise DegreeMismatch(f"{left} does not end at the origin of {g}.")
        result = {(alpha(i), GenIdx(m + 1, i + 1, j), end): k.q_pow(-j)}
        if j == m:
            accumulate(
                result,
                (e(i), GenIdx(m + 1, i, m + 1), beta(i + m)),
                k.sign(m) * k.q_pow(-m),
            )
        return result

    def homotopy_t(self, m: int, x: PElem) -> PElem:
        """Right-linear contracting homotopy t_m: P_m → P_{m+1}.

        :param int m: degree of `x`.
        :param PElem x: element in left-basis form.

        :returns: t_m(x).
        :rtype: PElem

        :raises DegreeMismatch: when `x` has a generator of another degree.
        """
        result: PElem = {}
        for (left, g, right), c in x.items():
            if g.m != m:
                raise DegreeMismatch(
                    f"t_{m} applied to a generator of degree {g.m}."
                )
            for (l, h, r), ch in self._t_generator(left, g).items():
                product = self.algebra.basis_product(r, right)
                if product is not None:
                    accumulate(result, (l, h, product[0]), c * ch * product[1])
        return result

    def homotopy_t_unit(self, x: AlgElem) -> PElem:
        """t_{-1}: A_q → P_0, b ↦ e_o(b) ⊗ b."""
        result: PElem = {}
        for b, c in x.items():
            v = source(b)
            accumulate(result, (e(v), GenIdx(0, v, 0), b), c)
        return result

    def homotopy_s(self, y: BarChain) -> BarChain:
        """Contracting homotopy s of the reduced bar resolution.

        Prepends the source idempotent of the left coefficient, which moves
        into the tensor; terms whose left coefficient is an idempotent
        vanish. Degree -1 chains (1-tuples) are sent to e_o(b) ⊗̄ b.

        :param BarChain y: chain in left-basis form.

        :returns: s(y), one degree higher.
        :rtype: BarChain
        """
        result: BarChain = {}
        for key, c in y.items():
            first = key[0]
            if len(key) > 1 and is_idempotent(first):
                continue
            accumulate(result, (e(source(first)),) + key, c)
        return result

    def phi(self, x: PElem) -> BarChain:
        """Comparison morphism Φ_m, f^m_(i,j) ↦ o ⊗̄ g^m_(i,j) ⊗̄ t."""
        return self.resolution.phi(x)

    def psi_word(self, m: int, word: Word, origin: int = 1) -> PElem:
        """Ψ_m on the free generator e ⊗̄ word ⊗̄ e.

        :param int m: length of the word.
        :param Word word: composable non-idempotent basis elements.
        :param int origin: vertex of the empty word, used only when m = 0.

        :returns: Ψ_m(e ⊗̄ word ⊗̄ e).
        :rtype: PElem
        """
        if len(word) != m:
            raise DegreeMismatch(f"Word of length {len(word)} in degree {m}.")
        if m == 0:
            return {(e(origin), GenIdx(0, origin, 0), e(origin)): self.k.one}
        key = (source(word[0]), word)
        found = self._psi_memo.get(key)
        if found is not None:
            return found
        if not is_composable(word) or any(is_idempotent(a) for a in word):
            raise DegreeMismatch(f"{word} is not a reduced bar word.")
        ends = (e(source(word[0])),), (e(target(word[-1])),)
        generator = {ends[0] + word + ends[1]: self.k.one}
        value = self.homotopy_t(
            m - 1, self.psi(m - 1, self.resolution.bar_d(generator))
        )
        with self._lock:
            self._psi_memo.setdefault(key, value)
        logger.debug(f"Psi memo holds {len(self._psi_memo)} words")
        return value

    def psi(self, m: int, y: BarChain) -> PElem:
        """Comparison morphism Ψ_m extended bimodule-linearly.

        :param int m: degree of `y`.
        :param BarChain y: chain of the reduced bar resolution.

        :returns: Ψ_m(y).
        :rtype: PElem
        """
        result: PElem = {}
        for key, c in y.items():
            left, word, right = key[0], key[1:-1], key[-1]
            if len(word) != m:
                raise DegreeMismatch(
                    f"Psi_{m} applied to a chain of degree {len(word)}."
                )
            origin = target(left)
            add_scaled(
                result,
                self.resolution.act(
                    left, self.psi_word(m, word, origin), right
                ),
                c,
            )
        return result

    @property
    def memo_size(self) -> int:
        return len(self._psi_memo)
