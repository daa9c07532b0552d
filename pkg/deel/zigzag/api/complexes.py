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
This module implements the complexes computing Hochschild homology and
cohomology of the zigzag algebra from its minimal resolution: the chain
complex N of closed pairs with differential τ, the cochain complex L of
parallel pairs with differential σ, their dimensions, cyclic homology and
explicit cohomology bases.
"""
import logging
from dataclasses import dataclass
from dataclasses import field
from typing import Dict
from typing import Iterable
from typing import List
from typing import Tuple

from joblib import Parallel
from joblib import delayed

from deel.zigzag.api import closed_forms
from deel.zigzag.api.algebra import AlgElem
from deel.zigzag.api.algebra import Basis
from deel.zigzag.api.algebra import format_linear
from deel.zigzag.api.algebra import source
from deel.zigzag.api.algebra import target
from deel.zigzag.api.linalg import Echelon
from deel.zigzag.api.linalg import Quotient
from deel.zigzag.api.linalg import SparseMatrix
from deel.zigzag.api.linalg import Vector
from deel.zigzag.api.linalg import rank_of
from deel.zigzag.api.resolution import GenIdx
from deel.zigzag.api.resolution import MinimalResolution
from deel.zigzag.api.resolution import PElem
from deel.zigzag.api.resolution import generators
from deel.zigzag.api.scalars import Scalar
from deel.zigzag.api.utils import DegreeMismatch
from deel.zigzag.api.utils import accumulate
from deel.zigzag.api.utils import degree_check
from deel.zigzag.api.utils import n_jobs

logger = logging.getLogger(__name__)

Pair = Tuple[Basis, GenIdx]
# Sparse maps over closed pairs (chains) and parallel pairs (cochains).
Chain = Dict[Pair, Scalar]
Cochain = Dict[Pair, Scalar]

_BLOCKS = {
    Basis.E1: 0,
    Basis.E2: 0,
    Basis.A1: 1,
    Basis.A2: 1,
    Basis.B1: 2,
    Basis.B2: 2,
    Basis.L1: 3,
    Basis.L2: 3,
}


def chain_basis(m: int) -> List[Pair]:
    """Closed pairs (b, f^m_(i,j)) with b running from t(f) back to o(f).

    Ordered by basis block (idempotents, α, β, loops), then by j, then by b.
    """
    pairs = [
        (b, g)
        for g in generators(m)
        for b in Basis
        if target(b) == g.origin and source(b) == g.target
    ]
    return sorted(
        pairs, key=lambda pair: (_BLOCKS[pair[0]], pair[1].j, pair[0])
    )


def cochain_basis(m: int) -> List[Pair]:
    """Parallel pairs (b, f^m_(i,j)) with b running from o(f) to t(f),
    ordered by j, then by b."""
    pairs = [
        (b, g)
        for g in generators(m)
        for b in Basis
        if source(b) == g.origin and target(b) == g.target
    ]
    return sorted(pairs, key=lambda pair: (pair[1].j, pair[0]))


def pair_to_str(pair: Pair) -> str:
    b, g = pair
    return f"({b}, {g})"


@dataclass
class HHClass:
    """Cohomology class of degree `degree`.

    :param int degree: cohomological degree.
    :param Cochain representative: reduced cocycle representing the class.
    :param tuple coordinates: coordinates in the stored quotient basis.
    """

    degree: int
    representative: Cochain
    coordinates: Tuple[Scalar, ...] = field(default_factory=tuple)

    @property
    def is_zero(self) -> bool:
        return not any(self.coordinates)


class HochschildComplexes:
    """Homology complex (N, τ) and cohomology complex (L, σ) of A_q.

    :param MinimalResolution resolution: the minimal resolution.

    Matrices, ranks and quotients are cached per degree.

    .. code-block:: python

        from deel.zigzag.api.scalars import QSpec, make_field
        from deel.zigzag.api.algebra import ZigzagAlgebra
        from deel.zigzag.api.resolution import MinimalResolution
        from deel.zigzag.api.complexes import HochschildComplexes

        algebra = ZigzagAlgebra(make_field(QSpec.rational(-1)))
        complexes = HochschildComplexes(MinimalResolution(algebra))

        print([complexes.hh_dim(m) for m in range(5)])  # [3, 4, 6, 8, 10]
    """

    def __init__(self, resolution: MinimalResolution):
        self.resolution = resolution
        self.algebra = resolution.algebra
        self.k = resolution.k
        self._tau: Dict[int, SparseMatrix] = {}
        self._sigma: Dict[int, SparseMatrix] = {}
        self._rank_tau: Dict[int, int] = {}
        self._rank_sigma: Dict[int, int] = {}
        self._quotients: Dict[int, Quotient] = {}
        self._cochain_index: Dict[int, Dict[Pair, int]] = {}

    def chain_basis(self, m: int) -> List[Pair]:
        return chain_basis(m)

    def cochain_basis(self, m: int) -> List[Pair]:
        return cochain_basis(m)

    def cochain_index(self, m: int) -> Dict[Pair, int]:
        index = self._cochain_index.get(m)
        if index is None:
            index = {pair: n for n, pair in enumerate(cochain_basis(m))}
            self._cochain_index[m] = index
        return index

    def tau(self, m: int) -> SparseMatrix:
        """Matrix of τ_m: N_m → N_{m-1}.

        A chain (b, f) is sent to the sum of (r·b·l, f') over the terms
        l ⊗ f' ⊗ r of d_m(f).

        :param int m: degree, at least 1.

        :returns: the matrix under the chain-basis orderings.
        :rtype: SparseMatrix
        """
        degree_check(m, minimum=1)
        found = self._tau.get(m)
        if found is not None:
            return found
        algebra = self.algebra
        rows = chain_basis(m - 1)
        row_index = {pair: n for n, pair in enumerate(rows)}
        cols = chain_basis(m)
        columns = []
        for b, g in cols:
            column: Vector = {}
            for (l, h, r), c in self.resolution.d_generator(g):
                rb = algebra.basis_product(r, b)
                if rb is None:
                    continue
                rbl = algebra.basis_product(rb[0], l)
                if rbl is None:
                    continue
                accumulate(column, row_index[(rbl[0], h)], c * rb[1] * rbl[1])
            columns.append(column)
        matrix = SparseMatrix(self.k, rows, cols, columns)
        self._tau[m] = matrix
        return matrix

    def sigma(self, m: int) -> SparseMatrix:
        """Matrix of σ^m: L^{m-1} → L^m.

        A cochain φ is sent to the cochain g ↦ Σ c·l·φ(f')·r over the terms
        c·l ⊗ f' ⊗ r of d_m(g).

        :param int m: degree, at least 1.

        :returns: the matrix under the cochain-basis orderings.
        :rtype: SparseMatrix
        """
        degree_check(m, minimum=1)
        found = self._sigma.get(m)
        if found is not None:
            return found
        algebra = self.algebra
        rows = cochain_basis(m)
        row_index = self.cochain_index(m)
        cols = cochain_basis(m - 1)
        col_index = self.cochain_index(m - 1)
        columns: List[Vector] = [{} for _ in cols]
        by_generator: Dict[GenIdx, List[Basis]] = {}
        for b, h in cols:
            by_generator.setdefault(h, []).append(b)
        for g in generators(m):
            for (l, h, r), c in self.resolution.d_generator(g):
                for b in by_generator.get(h, ()):
                    lb = algebra.basis_product(l, b)
                    if lb is None:
                        continue
                    lbr = algebra.basis_product(lb[0], r)
                    if lbr is None:
                        continue
                    accumulate(
                        columns[col_index[(b, h)]],
                        row_index[(lbr[0], g)],
                        c * lb[1] * lbr[1],
                    )
        matrix = SparseMatrix(self.k, rows, cols, columns)
        self._sigma[m] = matrix
        return matrix

    def rank_tau(self, m: int) -> int:
        """Rank of τ_m, with rank τ_0 = 0."""
        if m == 0:
            return 0
        if m not in self._rank_tau:
            self._rank_tau[m] = self.tau(m).rank()
            logger.info(f"rank tau_{m} = {self._rank_tau[m]}")
        return self._rank_tau[m]

    def rank_sigma(self, m: int) -> int:
        """Rank of σ^m, with rank σ^0 = 0."""
        if m == 0:
            return 0
        if m not in self._rank_sigma:
            self._rank_sigma[m] = self.sigma(m).rank()
            logger.info(f"rank sigma^{m} = {self._rank_sigma[m]}")
        return self._rank_sigma[m]

    def precompute(self, m_max: int):
        """Compute the ranks of τ_m and σ^m for m <= m_max + 1 on
        `DEEL_ZIGZAG_N_JOBS` threads."""
        degrees = range(1, m_max + 2)
        Parallel(n_jobs=n_jobs(), prefer="threads")(
            delayed(rank)(m)
            for m in degrees
            for rank in (self.rank_tau, self.rank_sigma)
        )

    def hh_dim(self, m: int) -> int:
        """dim HH_m = dim N_m - rank τ_m - rank τ_{m+1}."""
        degree_check(m)
        return 4 * (m + 1) - self.rank_tau(m) - self.rank_tau(m + 1)

    def hh_codim(self, m: int) -> int:
        """dim HH^m = dim ker σ^{m+1} - rank σ^m."""
        degree_check(m)
        return 4 * (m + 1) - self.rank_sigma(m + 1) - self.rank_sigma(m)

    def hc_dim(self, m: int) -> int:
        """Cyclic homology dimension in characteristic 0.

        Uses dim HC_m(A) - dim HC_m(k²) = Σ_i (-1)^{m-i} (dim HH_i(A) -
        dim HH_i(k²)), where k² has HH_0 = 2 and HC_i = 2 for even i.
        """
        degree_check(m)
        total = 2 if m % 2 == 0 else 0
        for i in range(m + 1):
            reduced = self.hh_dim(i) - (2 if i == 0 else 0)
            total += reduced if (m - i) % 2 == 0 else -reduced
        return total

    def quotient(self, m: int) -> Quotient:
        """ker σ^{m+1} / im σ^m with its canonical complement."""
        degree_check(m)
        found = self._quotients.get(m)
        if found is not None:
            return found
        cycles = self.sigma(m + 1).kernel()
        boundaries = self.sigma(m).image() if m > 0 else Echelon(self.k)
        quotient = Quotient(self.k, cycles, boundaries)
        logger.info(f"HH^{m} has dimension {len(quotient)}")
        self._quotients[m] = quotient
        return quotient

    def to_vector(self, m: int, x: Cochain) -> Vector:
        index = self.cochain_index(m)
        vector: Vector = {}
        for pair, c in x.items():
            if pair[1].m != m:
                raise DegreeMismatch(
                    f"Cochain of degree {pair[1].m} read in degree {m}."
                )
            if pair not in index:
                raise ValueError(f"{pair_to_str(pair)} is not a parallel pair.")
            accumulate(vector, index[pair], c)
        return vector

    def to_cochain(self, m: int, v: Vector) -> Cochain:
        basis = cochain_basis(m)
        return {basis[n]: c for n, c in v.items()}

    def hh_basis(self, m: int) -> List[HHClass]:
        """Basis of HH^m as canonical reduced cocycles.

        The representatives form the reduced echelon basis of the kernel of
        σ^{m+1} modulo the image of σ^m under the cochain ordering.
        """
        quotient = self.quotient(m)
        classes = []
        for n, row in enumerate(quotient.representatives()):
            coordinates = tuple(
                self.k.one if p == n else self.k.zero
                for p in range(len(quotient))
            )
            classes.append(HHClass(m, self.to_cochain(m, row), coordinates))
        return classes

    def classify(self, m: int, x: Cochain) -> HHClass:
        """Class of a cocycle, in canonical form.

        :param int m: degree of `x`.
        :param Cochain x: a cocycle of L^m.

        :returns: the class with its reduced representative.
        :rtype: HHClass

        :raises ValueError: when `x` is not a cocycle.
        """
        quotient = self.quotient(m)
        coordinates = quotient.coordinates(self.to_vector(m, x))
        return self.from_coordinates(m, coordinates)

    def from_coordinates(
        self, m: int, coordinates: Iterable[Scalar]
    ) -> HHClass:
        coordinates = tuple(coordinates)
        representative = self.to_cochain(
            m, self.quotient(m).combine(coordinates)
        )
        return HHClass(m, representative, coordinates)

    def zero_class(self, m: int) -> HHClass:
        zeros = tuple(self.k.zero for _ in range(len(self.quotient(m))))
        return HHClass(m, {}, zeros)

    def is_cocycle(self, m: int, x: Cochain) -> bool:
        return not self.sigma(m + 1).apply(self.to_vector(m, x))

    def is_coboundary(self, m: int, x: Cochain) -> bool:
        if m == 0:
            return not x
        return self.to_vector(m, x) in self.sigma(m).image()

    def coboundary(self, m: int, x: Cochain) -> Cochain:
        """σ^{m+1}(x)."""
        image = self.sigma(m + 1).apply(self.to_vector(m, x))
        return self.to_cochain(m + 1, image)

    def evaluate(self, x: Cochain, y: PElem) -> AlgElem:
        """Value of the cochain `x` on an element of P, l·x(f)·r summed."""
        algebra = self.algebra
        result: AlgElem = {}
        for (l, g, r), c in y.items():
            for (b, h), cb in x.items():
                if h != g:
                    continue
                lb = algebra.basis_product(l, b)
                if lb is None:
                    continue
                lbr = algebra.basis_product(lb[0], r)
                if lbr is None:
                    continue
                accumulate(result, lbr[0], c * cb * lb[1] * lbr[1])
        return result

    def span_check(self, m: int, cocycles: List[Cochain]) -> bool:
        """Whether the classes of `cocycles` span HH^m.

        False as soon as one of the cochains is not a cocycle.
        """
        quotient = self.quotient(m)
        vectors = []
        for x in cocycles:
            if not self.is_cocycle(m, x):
                logger.info(f"{self.to_str(x)} is not a cocycle in degree {m}")
                return False
            coordinates = quotient.coordinates(self.to_vector(m, x))
            vectors.append({n: c for n, c in enumerate(coordinates) if c})
        return rank_of(self.k, vectors) == len(quotient)

    def rank_formula_check(self, m_max: int) -> List[Tuple[int, int, int]]:
        """Compare rank τ_m with its closed form for 1 <= m <= m_max.

        :returns: mismatches as (m, computed, expected); empty when all
            ranks agree.
        :rtype: List[Tuple[int, int, int]]
        """
        qclass = self.k.classify()
        mismatches = []
        for m in range(1, m_max + 1):
            computed = self.rank_tau(m)
            expected = closed_forms.rank_tau(qclass, m)
            if computed != expected:
                logger.warning(
                    f"rank tau_{m}: computed {computed}, closed form {expected}"
                )
                mismatches.append((m, computed, expected))
        return mismatches

    def to_str(self, x: Cochain) -> str:
        """Render a cochain in pair notation, e.g. `(a1, f1_(1,1)) - (a2,
        f1_(2,1))`."""
        if not x:
            return "0"
        order = self.cochain_index(next(iter(x))[1].m)
        terms = sorted(x.items(), key=lambda term: order[term[0]])
        return format_linear(
            ((pair_to_str(pair), c) for pair, c in terms), self.k
        )

    def class_to_str(self, x: HHClass) -> str:
        return self.to_str(x.representative)
