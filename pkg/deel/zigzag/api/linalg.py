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
This module implements exact sparse linear algebra over the coefficient
fields of :mod:`deel.zigzag.api.scalars`: incremental reduced echelon
bases, ranks, kernels and quotients of subspaces.

Vectors are sparse maps `int -> Scalar` without stored zeros; the integer
keys are positions in the basis ordering attached to a matrix.
"""
import logging
from typing import Dict
from typing import Hashable
from typing import Iterable
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

from deel.zigzag.api.scalars import Field
from deel.zigzag.api.scalars import Scalar
from deel.zigzag.api.utils import WorkingSetExceeded
from deel.zigzag.api.utils import add_scaled
from deel.zigzag.api.utils import max_working_set
from deel.zigzag.api.utils import scaled

logger = logging.getLogger(__name__)

Vector = Dict[int, Scalar]


class Echelon:
    """Subspace of k^n stored as a reduced row echelon basis.

    Each stored row has coefficient 1 at its pivot (its smallest index) and
    coefficient 0 at every other pivot. Rows can carry a history vector that
    records them as combinations of the inserted vectors, which is what
    kernels are read from.

    :param deel.zigzag.api.scalars.Field k: coefficient field.
    :param bool track: keep the history of every row.
    :param int max_entries: cap on the number of stored nonzero entries,
        defaults to the `DEEL_ZIGZAG_MAX_ENTRIES` environment setting.

    .. code-block:: python

        from deel.zigzag.api.scalars import QSpec, make_field
        from deel.zigzag.api.linalg import Echelon

        k = make_field(QSpec.rational(2))
        space = Echelon(k)
        space.add({0: k.one, 1: k.q})
        space.add({0: k.q, 1: k.q * k.q})  # dependent, not stored
        print(len(space))  # 1
    """

    def __init__(
        self, k: Field, track: bool = False, max_entries: Optional[int] = None
    ):
        self.k = k
        self.track = track
        self.max_entries = (
            max_working_set() if max_entries is None else max_entries
        )
        self.rows: Dict[int, Vector] = {}
        self.history: Dict[int, Dict[Hashable, Scalar]] = {}
        self._entries = 0
        self.last_relation: Optional[Dict[Hashable, Scalar]] = None

    def __len__(self) -> int:
        return len(self.rows)

    def __contains__(self, v: Vector) -> bool:
        return not self.reduce(v)

    @property
    def pivots(self) -> List[int]:
        return sorted(self.rows)

    def basis(self) -> List[Vector]:
        """Stored rows in increasing pivot order."""
        return [self.rows[p] for p in self.pivots]

    def reduce(
        self, v: Vector, history: Optional[Dict[Hashable, Scalar]] = None
    ) -> Vector:
        """Remainder of `v` modulo the stored subspace.

        The remainder vanishes at every pivot. When `history` is given, it
        is updated in place with the same row operations.

        :param Vector v: vector to reduce, left untouched.
        :param dict history: optional combination tracked alongside.

        :returns: the reduced vector.
        :rtype: Vector
        """
        remainder = dict(v)
        for p in [p for p in v if p in self.rows]:
            c = remainder.get(p)
            if not c:
                continue
            add_scaled(remainder, self.rows[p], -c)
            if history is not None:
                add_scaled(history, self.history[p], -c)
        return remainder

    def add(self, v: Vector, label: Optional[Hashable] = None) -> bool:
        """Insert a vector and keep the basis reduced.

        :param Vector v: vector to insert.
        :param Hashable label: name of `v` in the history, mandatory when
            histories are tracked.

        :returns: True when the dimension grew, False when `v` was already
            in the span.
        :rtype: bool

        :raises WorkingSetExceeded: when the stored entries exceed the cap.
        """
        history = {label: self.k.one} if self.track else None
        remainder = self.reduce(v, history)
        if not remainder:
            self.last_relation = history
            return False
        pivot = min(remainder)
        factor = self.k.inv(remainder[pivot])
        remainder = scaled(remainder, factor)
        if history is not None:
            history = scaled(history, factor)
        for p, row in self.rows.items():
            c = row.get(pivot)
            if c:
                self._entries -= len(row)
                add_scaled(row, remainder, -c)
                self._entries += len(row)
                if self.track:
                    add_scaled(self.history[p], history, -c)
        self.rows[pivot] = remainder
        if self.track:
            self.history[pivot] = history
        self._entries += len(remainder)
        if self._entries > self.max_entries:
            raise WorkingSetExceeded(
                f"Elimination stores {self._entries} entries, above the cap "
                f"of {self.max_entries}."
            )
        return True

    def coordinates(self, v: Vector) -> Optional[Vector]:
        """Coordinates of `v` on the stored rows, indexed by pivot.

        :returns: the coordinates, None when `v` is not in the span.
        :rtype: Optional[Vector]
        """
        coordinates = {p: v[p] for p in v if p in self.rows}
        rest = dict(v)
        for p, c in coordinates.items():
            add_scaled(rest, self.rows[p], -c)
        return None if rest else coordinates


class SparseMatrix:
    """Exact sparse matrix stored by columns.

    :param deel.zigzag.api.scalars.Field k: coefficient field.
    :param Sequence row_labels: basis of the target space, in order.
    :param Sequence col_labels: basis of the source space, in order.
    :param list columns: image of each source basis vector, as sparse
        vectors over the row positions.
    """

    def __init__(
        self,
        k: Field,
        row_labels: Sequence[Hashable],
        col_labels: Sequence[Hashable],
        columns: List[Vector],
    ):
        self.k = k
        self.row_labels = list(row_labels)
        self.col_labels = list(col_labels)
        self.columns = columns
        logger.debug(
            f"Sparse matrix {len(self.row_labels)}x{len(self.col_labels)} "
            f"with {self.nnz} nonzero entries"
        )

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.row_labels), len(self.col_labels)

    @property
    def nnz(self) -> int:
        return sum(len(column) for column in self.columns)

    def entry(self, row: int, col: int) -> Scalar:
        return self.columns[col].get(row, self.k.zero)

    def apply(self, v: Vector) -> Vector:
        """Matrix-vector product."""
        result: Vector = {}
        for col, c in v.items():
            add_scaled(result, self.columns[col], c)
        return result

    def compose(self, other: "SparseMatrix") -> "SparseMatrix":
        """Product `self @ other`."""
        return SparseMatrix(
            self.k,
            self.row_labels,
            other.col_labels,
            [self.apply(column) for column in other.columns],
        )

    def is_zero(self) -> bool:
        return not any(self.columns)

    def image(self) -> Echelon:
        """Reduced echelon basis of the column space.

        Columns are inserted sparsest first, which keeps fill-in low.
        """
        space = Echelon(self.k)
        for column in sorted(self.columns, key=len):
            if column:
                space.add(column)
        return space

    def rank(self) -> int:
        """Exact rank."""
        return len(self.image())

    def kernel(self) -> List[Vector]:
        """Basis of the null space, in reduced echelon form over the column
        positions.

        :returns: kernel vectors indexed by column position.
        :rtype: List[Vector]
        """
        space = Echelon(self.k, track=True)
        null = Echelon(self.k)
        for col, column in enumerate(self.columns):
            if not space.add(column, label=col):
                null.add(space.last_relation)
        return null.basis()

    def to_dense(self) -> List[List[Scalar]]:
        n_rows, n_cols = self.shape
        return [
            [self.entry(r, c) for c in range(n_cols)] for r in range(n_rows)
        ]


def rank_of(k: Field, vectors: Iterable[Vector]) -> int:
    """Rank of a family of sparse vectors."""
    space = Echelon(k)
    for v in sorted(vectors, key=len):
        if v:
            space.add(v)
    return len(space)


class Quotient:
    """Quotient of a subspace Z by a subspace B ⊆ Z, with a canonical
    complement.

    The complement rows are the reduced echelon basis of the remainders of
    Z modulo B; they vanish at the pivots of B. Coordinates of a vector of Z
    are its remainder values at the complement pivots.

    :param deel.zigzag.api.scalars.Field k: coefficient field.
    :param Iterable cycles: spanning family of Z.
    :param Echelon boundaries: echelon basis of B.
    """

    def __init__(self, k: Field, cycles: Iterable[Vector], boundaries: Echelon):
        self.k = k
        self.boundaries = boundaries
        self.complement = Echelon(k)
        for v in cycles:
            self.complement.add(boundaries.reduce(v))

    def __len__(self) -> int:
        return len(self.complement)

    @property
    def pivots(self) -> List[int]:
        return self.complement.pivots

    def representatives(self) -> List[Vector]:
        """Canonical representatives of a basis of Z/B."""
        return self.complement.basis()

    def coordinates(self, v: Vector) -> List[Scalar]:
        """Coordinates of the class of `v` on :meth:`representatives`.

        :param Vector v: an element of Z.

        :returns: one scalar per complement row.
        :rtype: List[Scalar]

        :raises ValueError: when `v` is not in Z.
        """
        remainder = self.boundaries.reduce(v)
        found = self.complement.coordinates(remainder)
        if found is None:
            raise ValueError("Vector does not lie in the cycle space.")
        return [found.get(p, self.k.zero) for p in self.pivots]

    def combine(self, coordinates: Sequence[Scalar]) -> Vector:
        """Representative with the given coordinates."""
        result: Vector = {}
        for c, row in zip(coordinates, self.representatives()):
            add_scaled(result, row, c)
        return result

    def is_zero_class(self, v: Vector) -> bool:
        return not any(self.coordinates(v))


def span_equal(
    k: Field, left: Iterable[Vector], right: Iterable[Vector]
) -> bool:
    """Whether two families span the same subspace."""
    left_space = Echelon(k)
    for v in left:
        left_space.add(v)
    right = list(right)
    if any(v not in left_space for v in right):
        return False
    return rank_of(k, right) == len(left_space)
