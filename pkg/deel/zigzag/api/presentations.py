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
This module implements the presentations of the Hochschild cohomology ring
of A_q by generators and relations, together with the tables of the BV
operator and of the Gerstenhaber bracket on generators and their products.

Generators are explicit cocycles named `z1`, `z2` (degree 0), `u1`, ...
(degree 1) and `w0`, `w1`, `w2`. Monomials are tuples of generator names
read as cup products in the written order; the empty tuple is the unit.
"""
import logging
from dataclasses import dataclass
from dataclasses import field
from typing import Dict
from typing import List
from typing import Optional
from typing import Tuple

from deel.zigzag.api.algebra import Basis
from deel.zigzag.api.closed_forms import Cochain
from deel.zigzag.api.closed_forms import alpha_family
from deel.zigzag.api.closed_forms import beta_family
from deel.zigzag.api.closed_forms import e_family
from deel.zigzag.api.closed_forms import loop_family
from deel.zigzag.api.resolution import GenIdx
from deel.zigzag.api.scalars import Field
from deel.zigzag.api.scalars import QClass
from deel.zigzag.api.scalars import Scalar
from deel.zigzag.api.utils import UnknownClass

logger = logging.getLogger(__name__)

Monomial = Tuple[str, ...]
# Linear combination of monomials as (scalar, monomial) pairs.
Combination = Tuple[Tuple[Scalar, Monomial], ...]


@dataclass(frozen=True)
class Generator:
    """Named generator of the cohomology ring.

    :param str name: `z1`, `u3`, `w0`, ...
    :param int degree: cohomological degree.
    :param Cochain cocycle: explicit cocycle representing the generator.
    :param bool nilpotent: whether the generator is nilpotent.
    """

    name: str
    degree: int
    cocycle: Cochain = field(compare=False, hash=False)
    nilpotent: bool = True


@dataclass(frozen=True)
class Relation:
    """Relation of the presentation, the vanishing of a combination."""

    text: str
    terms: Combination = field(compare=False, hash=False)


@dataclass
class RingPresentation:
    """Generators, relations and BV/bracket tables for one case of q.

    :param QClass qclass: case of q the presentation belongs to.
    :param dict generators: generators by name, in presentation order.
    :param list relations: relations to be checked at class level.
    :param dict bv_table: nonzero BV values on generators and products of
        two generators; unlisted ones vanish.
    :param dict bracket_table: nonzero brackets of pairs of generators;
        unlisted ones vanish.
    :param int w_degree: degree of the w generators, None when absent.
    :param Relation quadric: the relation among the w generators.
    """

    qclass: QClass
    generators: Dict[str, Generator]
    relations: List[Relation]
    bv_table: Dict[Monomial, Combination]
    bracket_table: Dict[Tuple[str, str], Combination]
    w_degree: Optional[int] = None
    quadric: Optional[Relation] = None

    def generator(self, name: str) -> Generator:
        found = self.generators.get(name)
        if found is None:
            raise UnknownClass(
                f"{name!r} is not a generator for q {self.qclass}. "
                f"Available: {', '.join(self.generators)}."
            )
        return found

    def degree(self, monomial: Monomial) -> int:
        return sum(self.generator(name).degree for name in monomial)

    @property
    def names(self) -> List[str]:
        return list(self.generators)

    def nilpotent_names(self) -> List[str]:
        return [g.name for g in self.generators.values() if g.nilpotent]

    def table_products(self, degree_bound: int) -> List[Monomial]:
        """Generators and products of two generators of degree between 1
        and `degree_bound`, in presentation order."""
        names = self.names
        products = [(name,) for name in names]
        products += [
            (a, b) for n, a in enumerate(names) for b in names[n + 1 :]
        ]
        return [p for p in products if 1 <= self.degree(p) <= degree_bound]

    def bracket_pairs(self, degree_bound: int) -> List[Tuple[str, str]]:
        """Pairs of generators whose bracket has degree <= degree_bound."""
        names = self.names
        return [
            (a, b)
            for n, a in enumerate(names)
            for b in names[n:]
            if 0 <= self.degree((a, b)) - 1 <= degree_bound
        ]


def parse_monomial(text: str) -> Monomial:
    """`u1*w0` -> ("u1", "w0"); `1` -> ()."""
    text = text.strip()
    if text in ("", "1"):
        return ()
    return tuple(part.strip() for part in text.split("*"))


def monomial_to_str(monomial: Monomial) -> str:
    return "*".join(monomial) if monomial else "1"


def _combination(k: Field, *terms) -> Combination:
    """Build a combination from (int or scalar, "monomial text") pairs."""
    result = []
    for c, text in terms:
        c = k.convert(c) if isinstance(c, int) else c
        result.append((c, parse_monomial(text)))
    return tuple(result)


def _zero_relations(k: Field, texts: List[str]) -> List[Relation]:
    return [Relation(text, _combination(k, (1, text))) for text in texts]


def _l0(k: Field, c1: Scalar, c2: Scalar) -> Cochain:
    cochain = {}
    if c1:
        cochain[(Basis.L1, GenIdx(0, 1, 0))] = c1
    if c2:
        cochain[(Basis.L2, GenIdx(0, 2, 0))] = c2
    return cochain


def _common_relations(k: Field, us: List[str]) -> List[Relation]:
    texts = ["z1*z1", "z1*z2", "z2*z2"]
    texts += [f"{z}*{u}" for z in ("z1", "z2") for u in us]
    texts += [f"{u}*{u}" for u in us]
    return _zero_relations(k, texts)


def generic_presentation(k: Field) -> RingPresentation:
    """Presentation when q is not a root of unity: the pullback of
    k[z1, z2]/(z1, z2)² and the exterior algebra on u1, u2."""
    one = k.one
    generators = [
        Generator("z1", 0, _l0(k, one, one)),
        Generator("z2", 0, _l0(k, one, -one)),
        Generator("u1", 1, beta_family(k, 1, 0, one)),
        Generator("u2", 1, alpha_family(k, 1, 1, one)),
    ]
    bv_table = {
        ("u1",): _combination(k, (1, "1")),
        ("u2",): _combination(k, (1, "1")),
        ("u1", "u2"): _combination(k, (1, "u2"), (-1, "u1")),
    }
    bracket_table = {
        (z, u): _combination(k, (-1, z))
        for z in ("z1", "z2")
        for u in ("u1", "u2")
    }
    return RingPresentation(
        k.classify(),
        {g.name: g for g in generators},
        _common_relations(k, ["u1", "u2"]),
        bv_table,
        bracket_table,
    )


def plus_minus_one_presentation(k: Field) -> RingPresentation:
    """Presentation when q = ±1: four degree-1 generators and three
    degree-2 generators w0, w1, w2 subject to the ideal I."""
    q, one = k.q, k.one
    sign = 1 if q == one else -1
    generators = [
        Generator("z1", 0, _l0(k, one, q)),
        Generator("z2", 0, _l0(k, one, -q)),
        Generator(
            "u1",
            1,
            {
                (Basis.A1, GenIdx(1, 1, 0)): q,
                (Basis.A2, GenIdx(1, 2, 0)): one,
            },
        ),
        Generator("u2", 1, beta_family(k, 1, 0, one)),
        Generator("u3", 1, alpha_family(k, 1, 1, one)),
        Generator("u4", 1, beta_family(k, 1, 1, q)),
    ]
    generators += [
        Generator(f"w{j}", 2, e_family(k, 2, j), nilpotent=False)
        for j in range(3)
    ]
    us = ["u1", "u2", "u3", "u4"]
    relations = _common_relations(k, us)
    relations += _zero_relations(
        k, ["u1*u3", "u2*u4", "z2*w0", "z2*w1", "z2*w2"]
    )
    quadric = Relation(
        "w1*w1 - q*w0*w2", _combination(k, (1, "w1*w1"), (-q, "w0*w2"))
    )
    relations += [
        Relation(
            "u1*u2 - q*z1*w0",
            _combination(k, (1, "u1*u2"), (-q, "z1*w0")),
        ),
        Relation("u1*u4 - z1*w1", _combination(k, (1, "u1*u4"), (-1, "z1*w1"))),
        Relation("u1*u4 - u3*u2", _combination(k, (1, "u1*u4"), (-1, "u3*u2"))),
        Relation("u3*u4 - z1*w2", _combination(k, (1, "u3*u4"), (-1, "z1*w2"))),
        Relation(
            "u1*w1 - q*u3*w0",
            _combination(k, (1, "u1*w1"), (-q, "u3*w0")),
        ),
        Relation("u1*w2 - u3*w1", _combination(k, (1, "u1*w2"), (-1, "u3*w1"))),
        Relation(
            "u2*w1 - q*u4*w0",
            _combination(k, (1, "u2*w1"), (-q, "u4*w0")),
        ),
        Relation("u2*w2 - u4*w1", _combination(k, (1, "u2*w2"), (-1, "u4*w1"))),
        quadric,
    ]
    c = lambda *terms: _combination(k, *terms)  # noqa: E731
    bv_table = {
        ("u2",): c((1, "1")),
        ("u3",): c((1, "1")),
        ("z1", "w0"): c((-2 * sign, "u1")),
        ("z1", "w1"): c((1, "u2"), (-1, "u3")),
        ("z1", "w2"): c((2, "u4")),
        ("u1", "u2"): c((-2, "u1")),
        ("u1", "u4"): c((1, "u2"), (-1, "u3")),
        ("u2", "u3"): c((1, "u3"), (-1, "u2")),
        ("u3", "u4"): c((2, "u4")),
        ("u1", "w1"): c((sign, "w0")),
        ("u1", "w2"): c((2, "w1")),
        ("u2", "w0"): c((3, "w0")),
        ("u2", "w1"): c((2, "w1")),
        ("u2", "w2"): c((1, "w2")),
        ("u3", "w0"): c((1, "w0")),
        ("u3", "w1"): c((2, "w1")),
        ("u3", "w2"): c((3, "w2")),
        ("u4", "w0"): c((2 * sign, "w1")),
        ("u4", "w1"): c((1, "w2")),
    }
    bracket_table = {
        ("z1", "u2"): c((-1, "z1")),
        ("z1", "u3"): c((-1, "z1")),
        ("z2", "u2"): c((-1, "z2")),
        ("z2", "u3"): c((-1, "z2")),
        ("z1", "w0"): c((2 * sign, "u1")),
        ("z1", "w1"): c((1, "u3"), (-1, "u2")),
        ("z1", "w2"): c((-2, "u4")),
        ("u1", "u2"): c((1, "u1")),
        ("u1", "u3"): c((-1, "u1")),
        ("u1", "u4"): c((1, "u3"), (-1, "u2")),
        ("u2", "u4"): c((1, "u4")),
        ("u3", "u4"): c((-1, "u4")),
        ("u1", "w1"): c((-sign, "w0")),
        ("u1", "w2"): c((-2, "w1")),
        ("u2", "w0"): c((-2, "w0")),
        ("u2", "w1"): c((-1, "w1")),
        ("u3", "w1"): c((-1, "w1")),
        ("u3", "w2"): c((-2, "w2")),
        ("u4", "w0"): c((-2 * sign, "w1")),
        ("u4", "w1"): c((-1, "w2")),
    }
    return RingPresentation(
        k.classify(),
        {g.name: g for g in generators},
        relations,
        bv_table,
        bracket_table,
        w_degree=2,
        quadric=quadric,
    )


def root_presentation(k: Field) -> RingPresentation:
    """Presentation when q is a primitive s-th root of unity, s > 2: the
    w generators sit in degree 2s (odd s) or s (even s)."""
    qclass = k.classify()
    s = qclass.order
    one = k.one
    if s % 2:
        w_degree, step, big, small = 2 * s, s, 2 * s, s
        quadric_c, quadric_text = one, "w1*w1 - w0*w2"
        ws = [e_family(k, w_degree, j * step, one) for j in range(3)]
    else:
        w_degree, step, big, small = s, s // 2, s, s // 2
        quadric_c = k.q_pow(s * s // 4)
        quadric_text = f"w1*w1 - q^{s * s // 4}*w0*w2"
        ws = [e_family(k, w_degree, j * step) for j in range(3)]
    generators = [
        Generator("z1", 0, _l0(k, one, k.zero)),
        Generator("z2", 0, _l0(k, k.zero, one)),
        Generator("u1", 1, beta_family(k, 1, 0, one)),
        Generator("u2", 1, alpha_family(k, 1, 1, one)),
    ]
    generators += [
        Generator(f"w{j}", w_degree, ws[j], nilpotent=False) for j in range(3)
    ]
    relations = _common_relations(k, ["u1", "u2"])
    relations += _zero_relations(
        k, [f"{z}*w{j}" for z in ("z1", "z2") for j in range(3)]
    )
    quadric = Relation(
        quadric_text,
        _combination(k, (1, "w1*w1"), (-quadric_c, "w0*w2")),
    )
    relations.append(quadric)
    c = lambda *terms: _combination(k, *terms)  # noqa: E731
    bv_table = {
        ("u1",): c((1, "1")),
        ("u2",): c((1, "1")),
        ("u1", "u2"): c((1, "u2"), (-1, "u1")),
        ("u1", "w0"): c((big + 1, "w0")),
        ("u1", "w1"): c((small + 1, "w1")),
        ("u1", "w2"): c((1, "w2")),
        ("u2", "w0"): c((1, "w0")),
        ("u2", "w1"): c((small + 1, "w1")),
        ("u2", "w2"): c((big + 1, "w2")),
    }
    bracket_table = {
        (z, u): c((-1, z)) for z in ("z1", "z2") for u in ("u1", "u2")
    }
    bracket_table.update(
        {
            ("u1", "w0"): c((-big, "w0")),
            ("u1", "w1"): c((-small, "w1")),
            ("u2", "w1"): c((-small, "w1")),
            ("u2", "w2"): c((-big, "w2")),
        }
    )
    return RingPresentation(
        qclass,
        {g.name: g for g in generators},
        relations,
        bv_table,
        bracket_table,
        w_degree=w_degree,
        quadric=quadric,
    )


def presentation(k: Field) -> RingPresentation:
    """Ring presentation matching the case of q in the field `k`.

    .. code-block:: python

        from deel.zigzag.api.scalars import QSpec, make_field
        from deel.zigzag.api.presentations import presentation

        ring = presentation(make_field(QSpec.zeta(4)))
        print(ring.w_degree, ring.quadric.text)  # 4 w1*w1 - q^4*w0*w2
    """
    qclass = k.classify()
    if qclass.is_generic:
        return generic_presentation(k)
    if qclass.is_plus_minus_one:
        return plus_minus_one_presentation(k)
    return root_presentation(k)
