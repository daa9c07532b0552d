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
This module implements utility functions and the exceptions shared by the
computation modules.
"""
import logging
import os
from typing import Any
from typing import Dict
from typing import Hashable

logger = logging.getLogger(__name__)

MAX_ENTRIES_ENV = "DEEL_ZIGZAG_MAX_ENTRIES"
N_JOBS_ENV = "DEEL_ZIGZAG_N_JOBS"
DEFAULT_MAX_ENTRIES = 2_000_000


class ZeroQ(ValueError):
    """The deformation parameter q was set to zero."""


class BadOrder(ValueError):
    """A root of unity was requested with a non-positive order."""


class DegreeMismatch(ValueError):
    """An element was handed to a map of another degree."""


class DegreeOverflow(ValueError):
    """A product would land above the configured maximal degree."""


class DegreeZero(ValueError):
    """The BV operator was applied to a degree-0 class."""


class DegreeOutOfRange(ValueError):
    """A degree outside of the supported range was requested."""


class WindowExceeded(ValueError):
    """The bar-complex oracle was asked for a degree above its window."""


class UnknownClass(ValueError):
    """A class name is not part of the active ring presentation."""


class ConfigurationError(ValueError):
    """Malformed command line or environment configuration."""


class PresentationMismatch(RuntimeError):
    """A relation of the ring presentation does not vanish."""


class WorkingSetExceeded(RuntimeError):
    """Sparse elimination stored more entries than allowed."""


def vertex(i: int) -> int:
    """Normalize an integer index to its vertex representative in {1, 2}.

    All vertex and arrow subscripts are read modulo 2.

    :param int i: any integer index.

    :returns: 1 for odd indices, 2 for even indices.
    :rtype: int
    """
    return (i - 1) % 2 + 1


def degree_check(m: int, minimum: int = 0, name: str = "m"):
    """Check that a degree is an integer not smaller than `minimum`.

    :param int m: degree to check.
    :param int minimum: smallest admissible degree.
    :param str name: name of the argument, used in the error message.

    :raises DegreeOutOfRange: when the degree is below `minimum`.
    """
    if not isinstance(m, int) or m < minimum:
        raise DegreeOutOfRange(
            f"Argument `{name}` should be an integer >= {minimum}. "
            f"Provided {m}."
        )


def window_check(m: int, window: int):
    """Check that a degree lies inside the oracle window.

    :param int m: requested degree.
    :param int window: largest supported degree.

    :raises WindowExceeded: when `m` is larger than `window`.
    """
    if m > window:
        raise WindowExceeded(
            f"Degree {m} is outside of the bar complex window (<= {window})."
        )


def accumulate(target: Dict[Hashable, Any], key: Hashable, value: Any):
    """Add `value` to `target[key]` and drop the key when the sum vanishes.

    :param dict target: sparse coefficient map, modified in place.
    :param Hashable key: coordinate.
    :param Any value: exact scalar.
    """
    if not value:
        return
    total = target.get(key)
    total = value if total is None else total + value
    if total:
        target[key] = total
    else:
        target.pop(key, None)


def add_scaled(
    target: Dict[Hashable, Any], source: Dict[Hashable, Any], factor: Any
):
    """In place `target += factor * source` on sparse coefficient maps.

    :param dict target: sparse coefficient map, modified in place.
    :param dict source: sparse coefficient map.
    :param Any factor: exact scalar.
    """
    if not factor:
        return
    for key, value in source.items():
        accumulate(target, key, factor * value)


def scaled(source: Dict[Hashable, Any], factor: Any) -> Dict[Hashable, Any]:
    """Return `factor * source` as a new sparse map."""
    if not factor:
        return {}
    return {key: factor * value for key, value in source.items()}


def max_working_set() -> int:
    """Read the elimination working-set cap from the environment.

    :returns: maximal number of stored nonzero entries.
    :rtype: int

    :raises ConfigurationError: when the variable is not a positive integer.
    """
    raw = os.environ.get(MAX_ENTRIES_ENV)
    if raw is None:
        return DEFAULT_MAX_ENTRIES
    try:
        value = int(raw)
    except ValueError as error:
        raise ConfigurationError(
            f"{MAX_ENTRIES_ENV} should be an integer. Provided {raw}."
        ) from error
    if value <= 0:
        raise ConfigurationError(
            f"{MAX_ENTRIES_ENV} should be positive. Provided {value}."
        )
    return value


def n_jobs() -> int:
    """Number of joblib workers used for degree-parallel computations."""
    raw = os.environ.get(N_JOBS_ENV, "1")
    try:
        return int(raw)
    except ValueError as error:
        raise ConfigurationError(
            f"{N_JOBS_ENV} should be an integer. Provided {raw}."
        ) from error
