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
This module implements the cup product on the Hochschild cohomology of the
zigzag algebra: the diagonal map of the minimal resolution, the cochain
level products (closed form and through the diagonal), the class level
product, and the checks of the ring presentations.
"""
import logging
from dataclasses import dataclass
from dataclasses import field
from functools import lru_cache
from typing import Dict
from typing import List
from typing import Optional
from typing import Tuple

import numpy as np

from deel.zigzag.api.algebra import Basis
from deel.zigzag.api.algebra import e
from deel.zigzag.api.algebra import format_linear
from deel.zigzag.api.complexes import Cochain
from deel.zigzag.api.complexes import HHClass
from deel.zigzag.api.complexes import HochschildComplexes
from deel.zigzag.api.linalg import Echelon
from deel.zigzag.api.linalg import Vector
from deel.zigzag.api.presentations import Combination
from deel.zigzag.api.presentations import Monomial
from deel.zigzag.api.presentations import RingPresentation
from deel.zigzag.api.presentations import monomial_to_str
from deel.zigzag.api.resolution import GenIdx
from deel.zigzag.api.resolution import PElem
from deel.zigzag.api.resolution import generators
from deel.zigzag.api.scalars import Scalar
from deel.zigzag.api.utils import DegreeOverflow
from deel.zigzag.api.utils import PresentationMismatch
from deel.zigzag.api.utils import accumulate
from deel.zigzag.api.utils import degree_check

logger = logging.getLogger(__name__)

# Basis of P ⊗_A P: (left, generator, middle, generator, right).
TKey = Tuple[Basis, GenIdx, Basis, GenIdx, Basis]
TensorElem = Dict[TKey, Scalar]


@dataclass(frozen=True)
class DiagonalTerm:
    """Term coeff · left ⊗ right of Δ_m(f), with left of degree `split`."""

    split: int
    left: GenIdx
    right: GenIdx
    coeff: Scalar


def cochain_degree(x: Cochain) -> Optional[int]:
    """Degree of a nonzero cochain, None for the zero cochain."""
    for _, g in x:
        return g.m
    return None


def _values_by_generator(
    x: Cochain,
) -> Dict[GenIdx, List[Tuple[Basis, Scalar]]]:
    values: Dict[GenIdx, List[Tuple[Basis, Scalar]]] = {}
    for (b, g), c in x.items():
        values.setdefault(g, []).append((b, c))
    return values


class CupProduct:
    """Cup product of HH*(A_q) computed on the minimal resolution.

    :param HochschildComplexes complexes: cochain complexes of A_q.
    :param int max_degree: largest degree a class-level product may reach,
        unbounded when None.

    .. code-block:: python

        from deel.zigzag.api.scalars import QSpec, make_field
        from deel.zigzag.api.algebra import ZigzagAlgebra
        from deel.zigzag.api.resolution import MinimalResolution
        from deel.zigzag.api.complexes import HochschildComplexes
        from deel.zigzag.api.products import CupProduct

        algebra = ZigzagAlgebra(make_field(QSpec.generic()))
        complexes = HochschildComplexes(MinimalResolution(algebra))
        cup = CupProduct(complexes)

        one = complexes.classify(0, cup.unit())
        x = complexes.hh_basis(1)[0]
        assert cup.cup(one, x).coordinates == x.coordinates
    """

    def __init__(
        self, complexes: HochschildComplexes, max_degree: Optional[int] = None
    ):
        self.complexes = complexes
        self.resolution = complexes.resolution
        self.algebra = complexes.algebra
        self.k = complexes.k
        self.max_degree = max_degree
        self._diagonal = lru_cache(maxsize=None)(self._diagonal_terms)

    def _diagonal_terms(self, g: GenIdx) -> Tuple[DiagonalTerm, ...]:
        m, i, j = g.m, g.i, g.j
        terms = []
        for s in range(m + 1):
            for jl in range(min(s, j) + 1):
                left = GenIdx(s, i, jl)
                right = GenIdx(m - s, i - s, j - jl)
                if right.is_zero:
                    continue
                coeff = self.k.q_pow((s - jl) * (j - jl))
                terms.append(DiagonalTerm(s, left, right, coeff))
        return tuple(terms)

    def diagonal(self, g: GenIdx) -> List[DiagonalTerm]:
        """Δ_m on the free generator of `g`.

        :param GenIdx g: nonzero generator symbol.

        :returns: the terms, split degree first.
        :rtype: List[DiagonalTerm]
        """
        if g.is_zero:
            raise ValueError(f"{g} is the zero symbol.")
        return list(self._diagonal(g))

    def delta(self, x: PElem) -> TensorElem:
        """Δ extended bimodule-linearly to P."""
        result: TensorElem = {}
        for (left, g, right), c in x.items():
            for term in self._diagonal(g):
                key = (left, term.left, e(term.left.target), term.right, right)
                accumulate(result, key, c * term.coeff)
        return result

    def tensor_d(self, x: TensorElem) -> TensorElem:
        """Differential d ⊗ id + (-1)^s id ⊗ d of P ⊗_A P."""
        algebra = self.algebra
        result: TensorElem = {}
        for (left, g1, mid, g2, right), c in x.items():
            if g1.m > 0:
                for (l1, h, r1), c1 in self.resolution.d_generator(g1):
                    lp = algebra.basis_product(left, l1)
                    mp = algebra.basis_product(r1, mid)
                    if lp is None or mp is None:
                        continue
                    accumulate(
                        result,
                        (lp[0], h, mp[0], g2, right),
                        c * c1 * lp[1] * mp[1],
                    )
            if g2.m > 0:
                sign = self.k.sign(g1.m)
                for (l2, h, r2), c2 in self.resolution.d_generator(g2):
                    mp = algebra.basis_product(mid, l2)
                    rp = algebra.basis_product(r2, right)
                    if mp is None or rp is None:
                        continue
                    accumulate(
                        result,
                        (left, g1, mp[0], h, rp[0]),
                        sign * c * c2 * mp[1] * rp[1],
                    )
        return result

    def chain_map_defect(self, g: GenIdx) -> TensorElem:
        """b∘Δ_m - Δ_{m-1}∘d_m on the free generator of `g`; empty when Δ
        commutes with the differentials there."""
        degree_check(g.m, minimum=1, name="g.m")
        generator = {(e(g.origin), g, e(g.target)): self.k.one}
        defect = self.tensor_d(self.delta(generator))
        d_image = self.resolution.apply_d(g.m, generator)
        for key, c in self.delta(d_image).items():
            accumulate(defect, key, -c)
        return defect

    def unit(self) -> Cochain:
        """The unit cocycle (e1, f0_1) + (e2, f0_2)."""
        return {
            (Basis.E1, GenIdx(0, 1, 0)): self.k.one,
            (Basis.E2, GenIdx(0, 2, 0)): self.k.one,
        }

    def cup_closed_form(self, x: Cochain, y: Cochain) -> Cochain:
        """Cochain cup product from the closed formula

        (a, f^m_(i,j)) ⊔ (a', f^l_(i-m,j')) = q^{(m-j)j'} (aa', f^{m+l}_(i,j+j')),

        extended bilinearly; pairs whose generators do not chain vanish.
        """
        algebra = self.algebra
        result: Cochain = {}
        y_values = _values_by_generator(y)
        l = cochain_degree(y)
        if l is None:
            return result
        for (a, f), ca in x.items():
            m, i, j = f.m, f.i, f.j
            for jr in range(l + 1):
                for b, cb in y_values.get(GenIdx(l, i - m, jr), ()):
                    product = algebra.basis_product(a, b)
                    if product is None:
                        continue
                    accumulate(
                        result,
                        (product[0], GenIdx(m + l, i, j + jr)),
                        ca * cb * product[1] * self.k.q_pow((m - j) * jr),
                    )
        return result

    def cup_via_diagonal(self, x: Cochain, y: Cochain) -> Cochain:
        """Cochain cup product as the composite P → P ⊗_A P → A ⊗_A A → A.

        :param Cochain x: cochain of degree m.
        :param Cochain y: cochain of degree l.

        :returns: the cochain of degree m + l.
        :rtype: Cochain
        """
        m, l = cochain_degree(x), cochain_degree(y)
        if m is None or l is None:
            return {}
        algebra = self.algebra
        x_values = _values_by_generator(x)
        y_values = _values_by_generator(y)
        result: Cochain = {}
        for g in generators(m + l):
            for term in self._diagonal(g):
                if term.split != m:
                    continue
                for a, ca in x_values.get(term.left, ()):
                    for b, cb in y_values.get(term.right, ()):
                        product = algebra.basis_product(a, b)
                        if product is None:
                            continue
                        accumulate(
                            result,
                            (product[0], g),
                            term.coeff * ca * cb * product[1],
                        )
        return result

    def cup(self, x: HHClass, y: HHClass) -> HHClass:
        """Cup product of two classes, in canonical form.

        :raises DegreeOverflow: when the product degree exceeds
            `max_degree`.
        """
        degree = x.degree + y.degree
        if self.max_degree is not None and degree > self.max_degree:
            raise DegreeOverflow(
                f"Product of degree {degree} above the maximum degree "
                f"{self.max_degree}."
            )
        product = self.cup_closed_form(x.representative, y.representative)
        return self.complexes.classify(degree, product)

    def unit_class(self) -> HHClass:
        return self.complexes.classify(0, self.unit())


def class_vector(x: HHClass) -> Vector:
    return {n: c for n, c in enumerate(x.coordinates) if c}


def hilbert_series(
    presentation: RingPresentation, degree_bound: int
) -> np.ndarray:
    """Hilbert series of HH*/𝒩 up to `degree_bound`.

    It is 1 without w generators and (1 + t^d)/(1 - t^d)² = Σ (2k+1) t^{kd}
    otherwise, d the degree of the w generators.
    """
    series = np.zeros(degree_bound + 1, dtype=np.int64)
    series[0] = 1
    d = presentation.w_degree
    if d is None:
        return series
    geometric = np.zeros(degree_bound + 1, dtype=np.int64)
    geometric[::d] = 1
    numerator = series.copy()
    if d <= degree_bound:
        numerator[d] = 1
    series = np.convolve(np.convolve(numerator, geometric), geometric)
    return series[: degree_bound + 1]


@dataclass
class RelationStatus:
    """Outcome of one relation check.

    `status` is "pass", "fail" or "skipped" (degree above the bound);
    `oracle_status` is filled only when a failure was re-derived on the
    bar complex.
    """

    relation: str
    degree: int
    status: str
    witness: Cochain = field(default_factory=dict)
    oracle_status: Optional[str] = None


@dataclass
class PresentationReport:
    relations: List[RelationStatus]
    # degree -> (rank of the span of generator products, dim HH^m)
    generation: Dict[int, Tuple[int, int]]

    @property
    def ok(self) -> bool:
        return all(r.status != "fail" for r in self.relations) and all(
            rank == dim for rank, dim in self.generation.values()
        )


@dataclass
class QuotientReport:
    """Degreewise dimensions of HH*/𝒩 against the expected Hilbert series.

    `nilpotency` maps each generator to the first vanishing power, or None
    when its powers survive within the window.
    """

    computed: List[int]
    expected: List[int]
    nilpotency: Dict[str, Optional[int]]
    declared: Dict[str, bool]

    @property
    def ok(self) -> bool:
        declared_ok = all(
            (index is not None) == self.declared[name]
            for name, index in self.nilpotency.items()
        )
        return self.computed == self.expected and declared_ok


class RingStructure:
    """Presentation of HH*(A_q) evaluated through the cup product.

    :param CupProduct cup: the cup product.
    :param RingPresentation presentation: generators, relations and tables
        of the active case of q.
    """

    def __init__(self, cup: CupProduct, presentation: RingPresentation):
        self.cup = cup
        self.complexes = cup.complexes
        self.presentation = presentation
        self.k = cup.k
        self._classes: Dict[Monomial, HHClass] = {}
        self._monomial_bases: Dict[int, Tuple[List[Monomial], Echelon]] = {}

    def generator_class(self, name: str) -> HHClass:
        return self.monomial_class((name,))

    def monomial_class(self, monomial: Monomial) -> HHClass:
        """Class of a product of generators, multiplied left to right."""
        found = self._classes.get(monomial)
        if found is not None:
            return found
        if not monomial:
            value = self.cup.unit_class()
        elif len(monomial) == 1:
            generator = self.presentation.generator(monomial[0])
            value = self.complexes.classify(generator.degree, generator.cocycle)
        else:
            value = self.cup.cup(
                self.monomial_class(monomial[:-1]),
                self.monomial_class(monomial[-1:]),
            )
        self._classes[monomial] = value
        return value

    def combination_class(self, terms: Combination, degree: int) -> HHClass:
        """Class of a linear combination of monomials of one degree."""
        coordinates = [self.k.zero] * len(self.complexes.quotient(degree))
        for c, monomial in terms:
            value = self.monomial_class(monomial)
            if value.degree != degree:
                raise ValueError(
                    f"{monomial_to_str(monomial)} has degree {value.degree}, "
                    f"expected {degree}."
                )
            for n, x in enumerate(value.coordinates):
                coordinates[n] += c * x
        return self.complexes.from_coordinates(degree, coordinates)

    def monomials(self, degree: int) -> List[Monomial]:
        """Monomials of the given degree in presentation order, with at most
        one degree-0 factor and no repeated odd factor."""
        gens = list(self.presentation.generators.values())

        def extend(start: int, remaining: int, zero_used: bool):
            found: List[Monomial] = [()] if remaining == 0 else []
            for n in range(start, len(gens)):
                g = gens[n]
                if g.degree > remaining or (g.degree == 0 and zero_used):
                    continue
                repeat = g.degree > 0 and g.degree % 2 == 0
                for tail in extend(
                    n if repeat else n + 1,
                    remaining - g.degree,
                    zero_used or g.degree == 0,
                ):
                    found.append((g.name,) + tail)
            return found

        return extend(0, degree, False)

    def _monomial_basis(self, degree: int) -> Tuple[List[Monomial], Echelon]:
        found = self._monomial_bases.get(degree)
        if found is None:
            monomials = self.monomials(degree)
            space = Echelon(self.k, track=True)
            for n, monomial in enumerate(monomials):
                space.add(class_vector(self.monomial_class(monomial)), label=n)
            found = (monomials, space)
            self._monomial_bases[degree] = found
        return found

    def decompose(self, x: HHClass) -> Optional[Combination]:
        """Express a class through generator monomials.

        :returns: the combination, None when the monomials of its degree do
            not span it.
        :rtype: Optional[Combination]
        """
        monomials, space = self._monomial_basis(x.degree)
        history: Dict[int, Scalar] = {}
        if space.reduce(class_vector(x), history):
            return None
        return tuple(
            (-c, monomials[n]) for n, c in sorted(history.items()) if c
        )

    def render(self, x: HHClass) -> str:
        """Class in z/u/w notation when generator monomials span it, in
        pair notation otherwise."""
        if x.is_zero:
            return "0"
        combination = self.decompose(x)
        if combination is None:
            return self.complexes.class_to_str(x)
        return format_linear(
            ((monomial_to_str(m), c) for c, m in combination), self.k
        )

    def verify_presentation(
        self, degree_bound: int, oracle=None, strict: bool = False
    ) -> PresentationReport:
        """Check every relation at class level and the degreewise
        generation of HH^m by generator products for m <= degree_bound.

        :param int degree_bound: largest degree checked.
        :param oracle: optional :class:`deel.zigzag.api.oracle.BarOracle`
            that re-derives failing relations on the bar complex.
        :param bool strict: raise on the first confirmed failure.

        :returns: the per-relation statuses and the generation ranks.
        :rtype: PresentationReport

        :raises PresentationMismatch: in strict mode, for a failing relation.
        """
        statuses = []
        for relation in self.presentation.relations:
            degree = self.presentation.degree(relation.terms[0][1])
            if degree > degree_bound:
                statuses.append(
                    RelationStatus(relation.text, degree, "skipped")
                )
                continue
            value = self.combination_class(relation.terms, degree)
            if value.is_zero:
                statuses.append(RelationStatus(relation.text, degree, "pass"))
                continue
            status = RelationStatus(
                relation.text, degree, "fail", value.representative
            )
            if oracle is not None and degree <= oracle.window:
                confirmed = oracle.combination_class(
                    self, relation.terms, degree
                )
                status.oracle_status = "pass" if confirmed.is_zero else "fail"
            logger.warning(
                f"Relation {relation.text} fails: "
                f"{self.complexes.class_to_str(value)}"
            )
            if strict:
                raise PresentationMismatch(
                    f"Relation {relation.text} is not zero in HH^{degree}; "
                    f"oracle: {status.oracle_status or 'not consulted'}."
                )
            statuses.append(status)
        return PresentationReport(statuses, self.generation(degree_bound))

    def generation(self, degree_bound: int) -> Dict[int, Tuple[int, int]]:
        """Rank of the span of generator products in each degree next to
        dim HH^m, built recursively as S_m = Σ_g S_{m-|g|} ⊔ g."""
        positive = [
            g for g in self.presentation.generators.values() if g.degree > 0
        ]
        spans: Dict[int, List[HHClass]] = {}
        ranks = {}
        for m in range(degree_bound + 1):
            space = Echelon(self.k)
            kept = []
            if m == 0:
                candidates = [self.monomial_class(())] + [
                    self.generator_class(g.name)
                    for g in self.presentation.generators.values()
                    if g.degree == 0
                ]
            else:
                candidates = [
                    self.cup.cup(y, self.generator_class(g.name))
                    for g in positive
                    if g.degree <= m
                    for y in spans[m - g.degree]
                ]
            for value in candidates:
                if space.add(class_vector(value)):
                    kept.append(value)
            spans[m] = kept
            ranks[m] = (len(kept), len(self.complexes.quotient(m)))
            logger.info(f"Generator products span {ranks[m][0]} of HH^{m}")
        return ranks

    def nilpotency_index(self, name: str, degree_bound: int) -> Optional[int]:
        """First power of a generator that vanishes, None when every power
        up to degree 2·degree_bound survives (non-nilpotent within the
        window)."""
        x = self.generator_class(name)
        limit = 2 * degree_bound
        if self.cup.max_degree is not None:
            limit = min(limit, self.cup.max_degree)
        power, n = x, 1
        while not power.is_zero:
            if (x.degree == 0 and n > 3) or (n + 1) * x.degree > limit:
                return None
            power = self.cup.cup(power, x)
            n += 1
        return n

    def nilpotent_quotient(self, degree_bound: int) -> QuotientReport:
        """Dimensions of HH*/𝒩 in degrees <= degree_bound, 𝒩 the ideal
        generated by the nilpotent generators, against the expected Hilbert
        series."""
        nilpotency = {
            name: self.nilpotency_index(name, degree_bound)
            for name in self.presentation.names
        }
        nilpotent = [
            self.presentation.generator(name)
            for name, index in nilpotency.items()
            if index is not None
        ]
        computed = []
        for m in range(degree_bound + 1):
            ideal = Echelon(self.k)
            for g in nilpotent:
                if g.degree > m:
                    continue
                x = self.generator_class(g.name)
                for y in self.complexes.hh_basis(m - g.degree):
                    ideal.add(class_vector(self.cup.cup(x, y)))
            computed.append(len(self.complexes.quotient(m)) - len(ideal))
        expected = hilbert_series(self.presentation, degree_bound)
        declared = {
            g.name: g.nilpotent for g in self.presentation.generators.values()
        }
        return QuotientReport(
            computed, [int(v) for v in expected], nilpotency, declared
        )
