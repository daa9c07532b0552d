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
This module implements the closed-form answers for the zigzag algebra: ranks
of the differentials, dimensions of Hochschild homology, cohomology and
cyclic homology, and the explicit cocycle families spanning each
cohomology group. It also lists the closed-form values of the comparison
morphism Ψ on the bar words built from runs of arrows and socle elements.

Some published forms are incomplete. Where this matters, a `printed_*`
variant reproduces the published value next to the corrected one, so that
reports can show both.
"""
import logging
from typing import Dict
from typing import List
from typing import Optional
from typing import Tuple

from deel.zigzag.api.algebra import Basis
from deel.zigzag.api.algebra import alpha
from deel.zigzag.api.algebra import beta
from deel.zigzag.api.algebra import e
from deel.zigzag.api.algebra import loop
from deel.zigzag.api.resolution import GenIdx
from deel.zigzag.api.scalars import Field
from deel.zigzag.api.scalars import QClass
from deel.zigzag.api.scalars import Scalar
from deel.zigzag.api.utils import degree_check

logger = logging.getLogger(__name__)

Cochain = Dict[Tuple[Basis, GenIdx], Scalar]


def period(qclass: QClass) -> Optional[int]:
    """Degree period of the root-of-unity case: 2s for odd s, s for even s.

    :returns: the period, None outside the root-of-unity case.
    :rtype: Optional[int]
    """
    if not qclass.is_root:
        return None
    s = qclass.order
    return 2 * s if s % 2 else s


def _special(qclass: QClass, m: int, offset: int) -> int:
    """The l >= 1 with m = l·period - offset, or 0."""
    p = period(qclass)
    if p is None or (m + offset) % p or m + offset <= 0:
        return 0
    return (m + offset) // p


def rank_tau(qclass: QClass, m: int) -> int:
    """Rank of τ_m.

    2m when q is not a root of unity; m (odd m) or m+1 (even m) when q =
    ±1; for a primitive s-th root, 2m - 2l + 1 at m = lP - 1 and m = lP
    (P the period), 2m otherwise.
    """
    degree_check(m)
    if m == 0:
        return 0
    if qclass.is_plus_minus_one:
        return m if m % 2 else m + 1
    l = _special(qclass, m, 1) or _special(qclass, m, 0)
    if l:
        return 2 * m - 2 * l + 1
    return 2 * m


def printed_rank_tau(qclass: QClass, m: int) -> int:
    """Published rank of τ_m, which omits the drop at m = lP."""
    degree_check(m)
    if m == 0:
        return 0
    if qclass.is_root:
        l = _special(qclass, m, 1)
        return 2 * m - 2 * l + 1 if l else 2 * m
    return rank_tau(qclass, m)


def hh_dim(qclass: QClass, m: int) -> int:
    """dim HH_m(A_q)."""
    degree_check(m)
    if qclass.is_plus_minus_one:
        return 3 if m == 0 else 2 * m + 2
    if qclass.is_root and m > 0:
        l = _special(qclass, m, 1)
        if l:
            return 4 * l
        l = _special(qclass, m, 2) or _special(qclass, m, 0)
        if l:
            return 2 * l + 1
    return 2


def hc_dim(qclass: QClass, m: int) -> int:
    """dim HC_m(A_q) in characteristic 0, as given by the Loday recursion."""
    degree_check(m)
    if qclass.is_plus_minus_one:
        return m + 2 if m % 2 else m + 3
    if qclass.is_root:
        l = _special(qclass, m, 2) or _special(qclass, m, 1)
        if l:
            return 2 * l + 1
    return 2


def printed_hc_dim(qclass: QClass, m: int) -> int:
    """Published cyclic homology dimension: 4l-1, 3 and 2l at m = lP - 2,
    lP - 1 and lP. Agrees with :func:`hc_dim` only for l = 1."""
    degree_check(m)
    if qclass.is_root:
        l = _special(qclass, m, 2)
        if l:
            return 4 * l - 1
        if _special(qclass, m, 1):
            return 3
        l = _special(qclass, m, 0)
        if l:
            return 2 * l
        return 2
    return hc_dim(qclass, m)


def hh_codim(qclass: QClass, m: int) -> int:
    """dim HH^m(A_q)."""
    degree_check(m)
    if qclass.is_plus_minus_one:
        return 3 if m == 0 else 2 * m + 2
    if m <= 2:
        return 3 - m
    if qclass.is_root:
        l = _special(qclass, m, 0)
        if l:
            return 2 * l + 1
        l = _special(qclass, m, -1)
        if l:
            return 4 * l + 2
        l = _special(qclass, m, -2)
        if l:
            return 2 * l + 1
    return 0


def rank_sigma(qclass: QClass, m: int) -> int:
    """Rank of σ^m, from rank σ^m = dim L^{m-1} - dim HH^{m-1} -
    rank σ^{m-1}."""
    degree_check(m)
    rank = 0
    for n in range(1, m + 1):
        rank = 4 * n - hh_codim(qclass, n - 1) - rank
    return rank


def _pair_sum(
    k: Field, b1: Basis, g1: GenIdx, b2: Basis, g2: GenIdx, c: Scalar
) -> Cochain:
    cochain = {(b1, g1): k.one}
    if c:
        cochain[(b2, g2)] = c
    return cochain


def e_family(k: Field, m: int, j: int, c: Optional[Scalar] = None) -> Cochain:
    """(e1, f^m_(1,j)) + c·(e2, f^m_(2,j)), with c = q^j by default."""
    c = k.q_pow(j) if c is None else c
    return _pair_sum(
        k, Basis.E1, GenIdx(m, 1, j), Basis.E2, GenIdx(m, 2, j), c
    )


def loop_family(
    k: Field, m: int, j: int, c: Optional[Scalar] = None
) -> Cochain:
    """(α1β1, f^m_(1,j)) + c·(α2β2, f^m_(2,j)), with c = q^{j-1} by
    default."""
    c = k.q_pow(j - 1) if c is None else c
    return _pair_sum(
        k, Basis.L1, GenIdx(m, 1, j), Basis.L2, GenIdx(m, 2, j), c
    )


def beta_family(
    k: Field, m: int, j: int, c: Optional[Scalar] = None
) -> Cochain:
    """(β1, f^m_(2,j)) + c·(β2, f^m_(1,j)), with c = q^{m-1-j} by
    default."""
    c = k.q_pow(m - 1 - j) if c is None else c
    return _pair_sum(
        k, Basis.B1, GenIdx(m, 2, j), Basis.B2, GenIdx(m, 1, j), c
    )


def alpha_family(
    k: Field, m: int, j: int, c: Optional[Scalar] = None
) -> Cochain:
    """(α1, f^m_(1,j)) + c·(α2, f^m_(2,j)), with c = q^{j-1} by default."""
    c = k.q_pow(j - 1) if c is None else c
    return _pair_sum(
        k, Basis.A1, GenIdx(m, 1, j), Basis.A2, GenIdx(m, 2, j), c
    )


def expected_cocycles(
    k: Field, m: int, printed: bool = False
) -> List[Cochain]:
    """Explicit cocycles whose classes form a basis of HH^m(A_q).

    :param Field k: coefficient field, whose q decides the case.
    :param int m: cohomological degree.
    :param bool printed: use the published coefficients instead of the
        corrected ones. They differ only for primitive roots of even order,
        where the published β-, α- and loop families miss a factor (-1)^t.

    :returns: the listed cocycles, possibly empty.
    :rtype: List[Cochain]
    """
    degree_check(m)
    qclass = k.classify()
    q_inv = k.q_pow(-1)
    if m == 0:
        return [
            loop_family(k, 0, 0, q_inv),
            loop_family(k, 0, 0, -q_inv),
            e_family(k, 0, 0, k.one),
        ]
    if qclass.is_plus_minus_one:
        if m == 1:
            return [
                alpha_family(k, 1, 0, q_inv),
                beta_family(k, 1, 0, k.one),
                alpha_family(k, 1, 1, k.one),
                beta_family(k, 1, 1, q_inv),
            ]
        if m % 2:
            return [
                family(k, m, j)
                for j in range(m + 1)
                for family in (beta_family, alpha_family)
            ]
        return [
            family(k, m, j)
            for j in range(m + 1)
            for family in (loop_family, e_family)
        ]
    if qclass.is_generic:
        if m == 1:
            return [alpha_family(k, 1, 1), beta_family(k, 1, 0)]
        if m == 2:
            return [loop_family(k, 2, 1, k.one)]
        return []
    return _root_cocycles(k, qclass, m, printed)


def _root_cocycles(
    k: Field, qclass: QClass, m: int, printed: bool
) -> List[Cochain]:
    s = qclass.order
    p = period(qclass)
    step = s if s % 2 else s // 2
    published = k.one if printed else None
    l, rest = divmod(m, p)
    if rest == 0:
        return [
            e_family(k, m, t * step)
            for t in range(2 * l + 1)
        ]
    if rest == 1:
        cocycles = []
        for t in range(2 * l + 1):
            cocycles.append(beta_family(k, m, t * step, published))
            cocycles.append(
                alpha_family(k, m, t * step + 1, published)
            )
        return cocycles
    if rest == 2:
        return [
            loop_family(k, m, t * step + 1, published)
            for t in range(2 * l + 1)
        ]
    return []


PElem = Dict[Tuple[Basis, GenIdx, Basis], Scalar]
PsiVector = Tuple[str, Tuple[Basis, ...], PElem]


def _alphas(start: int, n: int) -> Tuple[Basis, ...]:
    return tuple(alpha(start + r) for r in range(n))


def _betas(start: int, n: int) -> Tuple[Basis, ...]:
    return tuple(beta(start - r) for r in range(n))


def _opening(g: GenIdx) -> Basis:
    return e(g.origin)


def _closing(g: GenIdx) -> Basis:
    return e(g.target)


def psi_closed_forms(k: Field, m: int) -> List[PsiVector]:
    """Closed-form values of Ψ_m on the free generators e ⊗̄ X ⊗̄ e of the
    reduced bar resolution, for the word shapes built from runs of α, runs
    of β and socle elements α_iβ_i.

    :param Field k: coefficient field.
    :param int m: length of the words, at least 1.

    :returns: triples (label, word, Ψ_m value) for both starting vertices.
    :rtype: List[PsiVector]
    """
    degree_check(m, minimum=1)
    q = k.q_pow
    vectors: List[PsiVector] = []
    for i in (1, 2):
        g = GenIdx(m, i, m)
        vectors.append(
            (f"a^{m} from {i}", _alphas(i, m), {(e(i), g, _closing(g)): k.one})
        )
        for j in range(m):
            a = m - j - 1
            g = GenIdx(m, i + 1, a)
            word = _betas(i, j + 1) + _alphas(i - j, a)
            value = {(_opening(g), g, _closing(g)): q(-(j + 1) * a)}
            vectors.append((f"b^{j + 1} a^{a} from {i}", word, value))
        vectors += _loop_vectors(k, m, i)
        if m == 2:
            vectors.append((f"a b from {i}", (alpha(i), beta(i)), {}))
    return vectors


def _loop_vectors(k: Field, m: int, i: int) -> List[PsiVector]:
    q, sign = k.q_pow, k.sign
    vectors: List[PsiVector] = []
    # socle element leading an α run
    top, lower = GenIdx(m, i, m), GenIdx(m, i + 1, m - 1)
    vectors.append(
        (
            f"L a^{m - 1} from {i}",
            (loop(i),) + _alphas(i, m - 1),
            {
                (alpha(i), lower, _closing(lower)): q(-(m - 1)),
                (e(i), top, beta(i + m - 1)): sign(m - 1) * q(-(m - 1)),
            },
        )
    )
    # socle element inside an α run
    for j in range(m - 1):
        n = m - j - 2
        word = _alphas(i, j + 1) + (loop(i + j + 1),) + _alphas(i + j + 1, n)
        value = {(e(i), top, beta(i + m - 1)): sign(n) * q(-n)}
        vectors.append((f"a^{j + 1} L a^{n} from {i}", word, value))
    # two socle elements separated by α runs
    for l in range(m - 1):
        n = m - l - 2
        word = (
            (loop(i),) + _alphas(i, l) + (loop(i + l),) + _alphas(i + l, n)
        )
        value = {(alpha(i), lower, beta(i + m - 2)): sign(n) * q(-(m - 1) - n)}
        vectors.append((f"L a^{l} L a^{n} from {i}", word, value))
    # socle element leading a β run and an α run
    for l in range(m - 1):
        a = m - l - 2
        g = GenIdx(m, i + 1, a)
        word = (loop(i),) + _betas(i - 1, l + 1) + _alphas(i - l - 1, a)
        value = {(alpha(i), g, _closing(g)): q(-(l + 2) * a)}
        vectors.append((f"L b^{l + 1} a^{a} from {i}", word, value))
    vectors += _spliced_vectors(k, m, i)
    return vectors


def _spliced_vectors(k: Field, m: int, i: int) -> List[PsiVector]:
    q, sign = k.q_pow, k.sign
    vectors: List[PsiVector] = []
    # β run, socle element, β run, α run
    for l in range(m - 1):
        for j in range(m - l - 1):
            a = m - l - j - 2
            g = GenIdx(m, i + 2, a)
            word = (
                _betas(i, l + 1)
                + (loop(i - l),)
                + _betas(i - l - 1, j)
                + _alphas(i - l - j, a)
            )
            value = {
                (alpha(i + 1), g, _closing(g)): sign(l + 1)
                * q(-(l + 1) - (l + j + 2) * a)
            }
            if j == 0:
                h = GenIdx(m, i + 1, a + 1)
                value[(e(i + 1), h, beta(m + i - 2 * l - 2))] = sign(
                    m - l
                ) * q(-(l + 1) - (l + 2) * a)
            vectors.append(
                (f"b^{l + 1} L b^{j} a^{a} from {i}", word, value)
            )
    # β run, α run, socle element, α run
    for l in range(m - 2):
        for j in range(1, m - l - 1):
            n = m - l - j - 2
            g = GenIdx(m, i + 1, m - l - 1)
            word = (
                _betas(i, l + 1)
                + _alphas(i - l, j)
                + (loop(i - l + j),)
                + _alphas(i - l + j, n)
            )
            c = sign(n) * q(-n - (l + 1) * (m - l - 1))
            value = {(e(i + 1), g, beta(m + i - 2 * l - 2)): c}
            vectors.append(
                (f"b^{l + 1} a^{j} L a^{n} from {i}", word, value)
            )
    # β run, socle element, β run, α run, socle element, α run
    for l in range(m - 3):
        for j in range(m - l - 3):
            for s in range(1, m - l - j - 2):
                n = m - l - j - s - 3
                g = GenIdx(m, i + 2, m - l - j - 2)
                word = (
                    _betas(i, l + 1)
                    + (loop(i - l),)
                    + _betas(i - l - 1, j)
                    + _alphas(i - l - j, s)
                    + (loop(i - l - j + s),)
                    + _alphas(i - l - j + s, n)
                )
                c = sign(m - j - s) * q(
                    -(l + 1) - (j + l + 2) * (m - j - l - 2) - n
                )
                value = {(alpha(i + 1), g, beta(m + i - 2 * j - 2 * l - 3)): c}
                vectors.append(
                    (f"b^{l + 1} L b^{j} a^{s} L a^{n} from {i}", word, value)
                )
    # socle element, β run, α run, socle element, α run
    for l in range(m - 3):
        for s in range(1, m - l - 2):
            n = m - l - s - 3
            g = GenIdx(m, i + 1, m - l - 2)
            word = (
                (loop(i),)
                + _betas(i - 1, l + 1)
                + _alphas(i - l - 1, s)
                + (loop(i - l - 1 + s),)
                + _alphas(i - l - 1 + s, n)
            )
            c = sign(n) * q(-n - (l + 2) * (m - l - 2))
            value = {(alpha(i), g, beta(m + i - 2 * l - 4)): c}
            vectors.append(
                (f"L b^{l + 1} a^{s} L a^{n} from {i}", word, value)
            )
    return vectors
