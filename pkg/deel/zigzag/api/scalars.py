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
This module implements exact coefficient fields parameterized by the
deformation parameter q, and the classification of q into the three
families (not a root of unity, q = ±1, primitive s-th root with s > 2) that
drive every dimension formula of the library.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any
from typing import Optional

from sympy import QQ
from sympy import Poly
from sympy import Symbol
from sympy import cyclotomic_poly
from sympy.polys.agca.extensions import FiniteExtension
from sympy.polys.fields import field

from deel.zigzag.api.utils import BadOrder
from deel.zigzag.api.utils import ConfigurationError
from deel.zigzag.api.utils import ZeroQ

logger = logging.getLogger(__name__)

Scalar = Any


@dataclass(frozen=True)
class QSpec:
    """Choice of the deformation parameter q.

    :param str kind: one of "generic", "rational" or "zeta".
    :param Fraction value: value of q when `kind` is "rational".
    :param int order: order s of the primitive root when `kind` is "zeta".

    The textual form is `generic`, `rational:p/r` or `zeta:s`.

    .. code-block:: python

        from deel.zigzag.api.scalars import QSpec

        spec = QSpec.parse("rational:-1/1")
        print(spec)  # rational:-1/1
    """

    kind: str
    value: Optional[Fraction] = None
    order: Optional[int] = None

    def __post_init__(self):
        if self.kind == "rational":
            if self.value is None or self.value == 0:
                raise ZeroQ("q must be nonzero. Provided q = 0.")
        elif self.kind == "zeta":
            if self.order is None or self.order < 1:
                raise BadOrder(
                    f"A root of unity needs a positive order. "
                    f"Provided s = {self.order}."
                )
        elif self.kind != "generic":
            raise ConfigurationError(f"Unknown q kind {self.kind}.")

    @classmethod
    def generic(cls) -> "QSpec":
        return cls("generic")

    @classmethod
    def rational(cls, numerator: int, denominator: int = 1) -> "QSpec":
        if denominator == 0:
            raise ConfigurationError("Denominator of q must be nonzero.")
        return cls("rational", value=Fraction(numerator, denominator))

    @classmethod
    def zeta(cls, order: int) -> "QSpec":
        return cls("zeta", order=order)

    @classmethod
    def parse(cls, text: str) -> "QSpec":
        """Build a specification from its textual form.

        :param str text: `generic`, `rational:p/r` (or `rational:p`) or
            `zeta:s`.

        :returns: the parsed specification.
        :rtype: QSpec

        :raises ConfigurationError: when the text is malformed.
        :raises ZeroQ: for `rational:0`.
        :raises BadOrder: for a non-positive order.
        """
        text = text.strip()
        if text == "generic":
            return cls.generic()
        kind, _, payload = text.partition(":")
        try:
            if kind == "rational":
                numerator, _, denominator = payload.partition("/")
                return cls.rational(int(numerator), int(denominator or 1))
            if kind == "zeta":
                return cls.zeta(int(payload))
        except ValueError as error:
            if isinstance(error, (ZeroQ, BadOrder, ConfigurationError)):
                raise
            raise ConfigurationError(
                f"Cannot parse q specification {text!r}."
            ) from error
        raise ConfigurationError(
            f"Unknown q specification {text!r}. Expected generic, "
            "rational:p/r or zeta:s."
        )

    def __str__(self) -> str:
        if self.kind == "rational":
            return f"rational:{self.value.numerator}/{self.value.denominator}"
        if self.kind == "zeta":
            return f"zeta:{self.order}"
        return "generic"


class QKind(Enum):
    NOT_ROOT_OF_UNITY = "not_root_of_unity"
    PLUS_MINUS_ONE = "plus_minus_one"
    PRIMITIVE_ROOT = "primitive_root"


@dataclass(frozen=True)
class QClass:
    """Case split of q: not a root of unity, q = ±1, or a primitive s-th
    root of unity with s > 2 (carrying its exact order)."""

    kind: QKind
    order: Optional[int] = None

    @property
    def is_generic(self) -> bool:
        return self.kind is QKind.NOT_ROOT_OF_UNITY

    @property
    def is_plus_minus_one(self) -> bool:
        return self.kind is QKind.PLUS_MINUS_ONE

    @property
    def is_root(self) -> bool:
        return self.kind is QKind.PRIMITIVE_ROOT

    def __str__(self) -> str:
        if self.is_root:
            return f"primitive_root({self.order})"
        return self.kind.value


class Field:
    """Base class of the exact coefficient fields.

    Subclasses set :data:`domain`, :data:`zero`, :data:`one` and :data:`q`.
    Elements are plain sympy domain elements: they support `+`, `-`, `*`
    and unary `-`; division goes through :meth:`div` and :meth:`inv`.

    :param QSpec spec: the q specification the field was built from.
    """

    domain = None
    zero = None
    one = None
    q = None

    def __init__(self, spec: QSpec):
        self.spec = spec
        self._powers = {}

    def convert(self, n: int) -> Scalar:
        """Image of an integer in the field."""
        return self.domain.convert(n)

    def convert_rational(self, numerator: int, denominator: int) -> Scalar:
        return self.div(self.convert(numerator), self.convert(denominator))

    def is_zero(self, x: Scalar) -> bool:
        return not x

    def inv(self, x: Scalar) -> Scalar:
        if self.is_zero(x):
            raise ZeroDivisionError("Inverse of zero requested.")
        return self.one / x

    def div(self, x: Scalar, y: Scalar) -> Scalar:
        return x * self.inv(y)

    def sign(self, e: int) -> Scalar:
        """(-1)^e as a field element."""
        return self.one if e % 2 == 0 else -self.one

    def q_pow(self, e: int) -> Scalar:
        """Exact q^e, negative exponents allowed.

        :param int e: exponent.

        :returns: q^e.
        :rtype: Scalar
        """
        e = self._reduce_exponent(e)
        power = self._powers.get(e)
        if power is None:
            if e >= 0:
                power = self.q**e
            else:
                power = self.inv(self.q ** (-e))
            self._powers[e] = power
        return power

    def _reduce_exponent(self, e: int) -> int:
        return e

    def to_str(self, x: Scalar) -> str:
        """Exact textual form of a scalar (`p/r`, polynomial in q or z)."""
        return str(self.domain.to_sympy(x))

    def classify(self) -> QClass:
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.spec})"


class GenericField(Field):
    """The rational function field Q(q) with q transcendental."""

    def __init__(self, spec: QSpec):
        super().__init__(spec)
        self.domain, self.q = field("q", QQ)
        self.zero = self.domain.zero
        self.one = self.domain.one

    def convert(self, n: int) -> Scalar:
        return self.domain(n)

    def to_str(self, x: Scalar) -> str:
        return str(x.as_expr())

    def classify(self) -> QClass:
        return QClass(QKind.NOT_ROOT_OF_UNITY)


class RationalField(Field):
    """The field Q with q a nonzero rational.

    Also used for the roots of unity of order 1 and 2.
    """

    def __init__(self, spec: QSpec, value: Fraction):
        super().__init__(spec)
        self.domain = QQ
        self.zero = QQ.zero
        self.one = QQ.one
        self.q = QQ(value.numerator, value.denominator)
        self.value = value

    def classify(self) -> QClass:
        if self.value in (1, -1):
            return QClass(QKind.PLUS_MINUS_ONE)
        return QClass(QKind.NOT_ROOT_OF_UNITY)


class CyclotomicField(Field):
    """The cyclotomic field Q(z) = Q[z]/(Phi_s(z)) with q = z primitive.

    :param QSpec spec: a `zeta:s` specification with s > 2.
    """

    def __init__(self, spec: QSpec):
        super().__init__(spec)
        self.order = spec.order
        z = Symbol("z")
        modulus = Poly(cyclotomic_poly(self.order, z), z, domain=QQ)
        self.domain = FiniteExtension(modulus)
        self.zero = self.domain.zero
        self.one = self.domain.one
        self.q = self.domain.generator

    def inv(self, x: Scalar) -> Scalar:
        if self.is_zero(x):
            raise ZeroDivisionError("Inverse of zero requested.")
        return x.inverse()

    def _reduce_exponent(self, e: int) -> int:
        return e % self.order

    def classify(self) -> QClass:
        return QClass(QKind.PRIMITIVE_ROOT, self.order)


def make_field(spec: QSpec) -> Field:
    """Build the exact coefficient field of a q specification.

    :param QSpec spec: q specification.

    :returns: a field handle exposing `zero`, `one`, `q` and the arithmetic
        helpers.
    :rtype: Field

    :raises ZeroQ: when q = 0.
    :raises BadOrder: when the root of unity has order s < 1.
    """
    if spec.kind == "generic":
        built = GenericField(spec)
    elif spec.kind == "rational":
        built = RationalField(spec, spec.value)
    elif spec.order == 1:
        built = RationalField(spec, Fraction(1))
    elif spec.order == 2:
        built = RationalField(spec, Fraction(-1))
    else:
        built = CyclotomicField(spec)
    logger.debug(f"Built coefficient field {built!r}")
    return built


def q_pow(k: Field, e: int) -> Scalar:
    """Exact power q^e in the field `k`; exponents reduce mod s for roots
    of unity."""
    return k.q_pow(e)


def classify_q(k: Field) -> QClass:
    """Classify q into the three-way case split."""
    return k.classify()
