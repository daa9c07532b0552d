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
This module implements the 8-dimensional quantum zigzag algebra A_q of type
Ã₁: its path basis, the multiplication table, the Nakayama automorphism, the
Frobenius form and its dual-basis (tilde) map.

Paths compose from left to right. The quiver has two vertices and four
arrows α₁: 1 → 2, α₂: 2 → 1, β₁: 2 → 1, β₂: 1 → 2, and the relations are
α₁α₂ = α₂α₁ = β₁β₂ = β₂β₁ = 0, α₁β₁ + qβ₂α₂ = 0 and α₂β₂ + qβ₁α₁ = 0.
"""
import logging
from enum import IntEnum
from typing import Dict
from typing import Optional
from typing import Tuple

from deel.zigzag.api.scalars import Field
from deel.zigzag.api.scalars import Scalar
from deel.zigzag.api.utils import accumulate
from deel.zigzag.api.utils import vertex

logger = logging.getLogger(__name__)


class Basis(IntEnum):
    """Path basis of A_q in the order e₁ ≺ e₂ ≺ α₁ ≺ α₂ ≺ β₁ ≺ β₂ ≺ α₁β₁ ≺
    α₂β₂."""

    E1 = 0
    E2 = 1
    A1 = 2
    A2 = 3
    B1 = 4
    B2 = 5
    L1 = 6
    L2 = 7

    def __str__(self) -> str:
        return _NAMES[self]


# Sparse map Basis -> Scalar without stored zeros.
AlgElem = Dict[Basis, Scalar]

_NAMES = {
    Basis.E1: "e1",
    Basis.E2: "e2",
    Basis.A1: "a1",
    Basis.A2: "a2",
    Basis.B1: "b1",
    Basis.B2: "b2",
    Basis.L1: "a1*b1",
    Basis.L2: "a2*b2",
}

_ENDPOINTS = {
    Basis.E1: (1, 1),
    Basis.E2: (2, 2),
    Basis.A1: (1, 2),
    Basis.A2: (2, 1),
    Basis.B1: (2, 1),
    Basis.B2: (1, 2),
    Basis.L1: (1, 1),
    Basis.L2: (2, 2),
}


def e(i: int) -> Basis:
    """Idempotent e_i."""
    return Basis.E1 if vertex(i) == 1 else Basis.E2


def alpha(i: int) -> Basis:
    """Arrow α_i: i → i+1."""
    return Basis.A1 if vertex(i) == 1 else Basis.A2


def beta(i: int) -> Basis:
    """Arrow β_i: i+1 → i."""
    return Basis.B1 if vertex(i) == 1 else Basis.B2


def loop(i: int) -> Basis:
    """Socle element α_iβ_i at vertex i."""
    return Basis.L1 if vertex(i) == 1 else Basis.L2


def source(b: Basis) -> int:
    return _ENDPOINTS[b][0]


def target(b: Basis) -> int:
    return _ENDPOINTS[b][1]


def is_idempotent(b: Basis) -> bool:
    return b in (Basis.E1, Basis.E2)


def is_arrow(b: Basis) -> bool:
    return b in (Basis.A1, Basis.A2, Basis.B1, Basis.B2)


def parse_basis(name: str) -> Basis:
    """Basis element from its printed name (`e1`, `a2`, `a1*b1`, ...)."""
    for b, text in _NAMES.items():
        if text == name.strip():
            return b
    raise ValueError(f"Unknown basis element {name!r}.")


NON_IDEMPOTENTS = tuple(b for b in Basis if not is_idempotent(b))
STAR = {
    Basis.E1: Basis.L1,
    Basis.E2: Basis.L2,
    Basis.L1: Basis.E1,
    Basis.L2: Basis.E2,
    Basis.A1: Basis.B1,
    Basis.B1: Basis.A1,
    Basis.A2: Basis.B2,
    Basis.B2: Basis.A2,
}


class ZigzagAlgebra:
    """The quantum zigzag algebra A_q over an exact field.

    :param deel.zigzag.api.scalars.Field k: coefficient field carrying q.

    Products of two basis elements are a scalar multiple of a single basis
    element or zero; they are tabulated once at construction.

    .. code-block:: python

        from deel.zigzag.api.scalars import QSpec, make_field
        from deel.zigzag.api.algebra import Basis, ZigzagAlgebra

        algebra = ZigzagAlgebra(make_field(QSpec.generic()))

        # β₂α₂ = -q⁻¹ α₁β₁
        print(algebra.to_str(algebra.multiply({Basis.B2: algebra.k.one},
                                              {Basis.A2: algebra.k.one})))
    """

    def __init__(self, k: Field):
        self.k = k
        self._table: Dict[Tuple[Basis, Basis], Tuple[Basis, Scalar]] = {}
        minus_q_inv = -k.q_pow(-1)
        for a in Basis:
            for b in Basis:
                product = self._basis_product(a, b, minus_q_inv)
                if product is not None:
                    self._table[(a, b)] = product
        self._nakayama = {
            b: (
                -k.q
                if b in (Basis.A1, Basis.A2)
                else (-k.q_pow(-1) if b in (Basis.B1, Basis.B2) else k.one)
            )
            for b in Basis
        }
        self._tilde = {
            Basis.E1: (Basis.L1, k.one),
            Basis.E2: (Basis.L2, k.one),
            Basis.A1: (Basis.B1, k.one),
            Basis.A2: (Basis.B2, k.one),
            Basis.B1: (Basis.A1, -k.q),
            Basis.B2: (Basis.A2, -k.q),
            Basis.L1: (Basis.E1, k.one),
            Basis.L2: (Basis.E2, k.one),
        }

    def _basis_product(
        self, a: Basis, b: Basis, minus_q_inv: Scalar
    ) -> Optional[Tuple[Basis, Scalar]]:
        one = self.k.one
        if target(a) != source(b):
            return None
        if is_idempotent(a):
            return b, one
        if is_idempotent(b):
            return a, one
        if a in (Basis.A1, Basis.A2) and b in (Basis.B1, Basis.B2):
            # α_i β_i
            return loop(source(a)), one
        if a in (Basis.B1, Basis.B2) and b in (Basis.A1, Basis.A2):
            # β_i α_i = -q⁻¹ α_{i+1} β_{i+1}
            return loop(source(a)), minus_q_inv
        return None

    def element(self, b: Basis, c: Optional[Scalar] = None) -> AlgElem:
        c = self.k.one if c is None else c
        return {b: c} if c else {}

    def unit(self) -> AlgElem:
        """The unit e₁ + e₂."""
        return {Basis.E1: self.k.one, Basis.E2: self.k.one}

    def basis_product(
        self, a: Basis, b: Basis
    ) -> Optional[Tuple[Basis, Scalar]]:
        """Product of two basis elements as (basis, scalar), None when zero."""
        return self._table.get((a, b))

    def multiply(self, x: AlgElem, y: AlgElem) -> AlgElem:
        """Bilinear product of two algebra elements.

        :param AlgElem x: left factor.
        :param AlgElem y: right factor.

        :returns: the product xy.
        :rtype: AlgElem
        """
        result: AlgElem = {}
        for a, ca in x.items():
            for b, cb in y.items():
                product = self._table.get((a, b))
                if product is not None:
                    accumulate(result, product[0], ca * cb * product[1])
        return result

    def nakayama_scalar(self, b: Basis) -> Scalar:
        """Scalar c with ν(b) = c·b."""
        return self._nakayama[b]

    def nakayama(self, x: AlgElem) -> AlgElem:
        """Nakayama automorphism: ν(α_i) = -qα_i, ν(β_i) = -q⁻¹β_i, identity
        on the idempotents and the socle."""
        return {b: c * self._nakayama[b] for b, c in x.items()}

    def trace(self, x: AlgElem) -> Scalar:
        """Socle functional λ: sum of the α₁β₁ and α₂β₂ coefficients."""
        return x.get(Basis.L1, self.k.zero) + x.get(Basis.L2, self.k.zero)

    def form(self, x: AlgElem, y: AlgElem) -> Scalar:
        """Frobenius form ⟨x, y⟩ = λ(xy)."""
        return self.trace(self.multiply(x, y))

    def tilde_basis(self, b: Basis) -> Tuple[Basis, Scalar]:
        """Dual basis element of `b` as (basis, scalar)."""
        return self._tilde[b]

    def tilde(self, b: Basis) -> AlgElem:
        """Dual basis element b̃ with ⟨a, b̃⟩ = δ_{a,b} on the path basis.

        :param Basis b: basis element.

        :returns: b̃, a scalar multiple of a basis element.
        :rtype: AlgElem
        """
        dual, c = self._tilde[b]
        return {dual: c}

    def star(self, b: Basis) -> Basis:
        """Symmetric dual b* used when q = -1."""
        return STAR[b]

    def to_str(self, x: AlgElem) -> str:
        """Render an element, e.g. `a1*b1 - (1/q)*a2*b2`."""
        if not x:
            return "0"
        return format_linear(
            ((str(b), c) for b, c in sorted(x.items())), self.k
        )


def format_linear(terms, k: Field) -> str:
    """Render a sparse linear combination of named vectors.

    :param Iterable terms: pairs (name, scalar).
    :param deel.zigzag.api.scalars.Field k: field used to print scalars.

    :returns: text such as `2*w1 - u3`.
    :rtype: str
    """
    parts = []
    for name, c in terms:
        if c == k.one:
            text, negative = name, False
        elif c == -k.one:
            text, negative = name, True
        else:
            coefficient = k.to_str(c)
            negative = coefficient.startswith("-") and "+" not in coefficient
            if negative:
                coefficient = coefficient[1:]
            if any(sym in coefficient for sym in "+-/ "):
                coefficient = f"({coefficient})"
            text = f"{coefficient}*{name}"
        if not parts:
            parts.append(f"-{text}" if negative else text)
        else:
            parts.append(f"- {text}" if negative else f"+ {text}")
    return " ".join(parts) if parts else "0"
