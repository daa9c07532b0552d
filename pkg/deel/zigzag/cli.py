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
This module implements the command line interface.

Subcommands `dims`, `basis`, `cup`, `bracket`, `bv`, `verify` and `cache`
share the flags `--q`, `--max`, `--format`, `--cache` and `-v`. Exit codes
are 0 on success, 1 when a computation fails, 2 on a verification mismatch
and 3 on a configuration or input error.
"""
import argparse
import logging
import sys
from dataclasses import asdict
from dataclasses import dataclass
from dataclasses import field
from typing import List
from typing import Optional

import pandas as pd

from deel.zigzag.api.scalars import QSpec
from deel.zigzag.api.utils import BadOrder
from deel.zigzag.api.utils import ConfigurationError
from deel.zigzag.api.utils import DegreeOutOfRange
from deel.zigzag.api.utils import DegreeOverflow
from deel.zigzag.api.utils import DegreeZero
from deel.zigzag.api.utils import UnknownClass
from deel.zigzag.api.utils import ZeroQ
from deel.zigzag.cache import ResultCache
from deel.zigzag.hochschild import DimsRow
from deel.zigzag.hochschild import HochschildCalculator
from deel.zigzag.reporting import FORMATS
from deel.zigzag.reporting import dims_frame
from deel.zigzag.reporting import render_frame
from deel.zigzag.reporting import render_report
from deel.zigzag.verification import SUITES
from deel.zigzag.verification import run_suites

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_MISMATCH = 2
EXIT_CONFIG = 3

# Errors caused by the command line itself, reported with EXIT_CONFIG.
USER_ERRORS = (
    ConfigurationError,
    ZeroQ,
    BadOrder,
    UnknownClass,
    DegreeOutOfRange,
    DegreeOverflow,
    DegreeZero,
)


@dataclass
class RunConfig:
    """Settings shared by every subcommand.

    :param QSpec qspec: choice of q.
    :param int max_degree: largest degree computed.
    :param str output: one of "text", "json" or "markdown".
    :param str cache_path: JSON lines cache, disabled when None.
    :param list suites: suites run by `verify`.
    """

    qspec: QSpec
    max_degree: int = 8
    output: str = "text"
    cache_path: Optional[str] = None
    suites: List[str] = field(default_factory=list)

    def __post_init__(self):
        if self.max_degree < 0:
            raise ConfigurationError(
                f"--max should be nonnegative. Provided {self.max_degree}."
            )
        if self.output not in FORMATS:
            raise ConfigurationError(
                f"--format should be one of {', '.join(FORMATS)}. "
                f"Provided {self.output}."
            )
        unknown = [s for s in self.suites if s not in SUITES]
        if unknown:
            raise ConfigurationError(
                f"Unknown suites {', '.join(unknown)}. "
                f"Available: {', '.join(SUITES)}."
            )
        if self.max_degree < 2 and {"ring", "bv-tables"} & set(self.suites):
            raise ConfigurationError(
                "Product suites need --max of at least 2."
            )

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        suites = [s.strip() for s in args.suite.split(",") if s.strip()]
        return cls(
            QSpec.parse(args.q), args.max, args.format, args.cache, suites
        )


def _emit(text: str):
    print(text)


def cmd_dims(config: RunConfig) -> int:
    """HH_m, HH^m and HC_m with their closed forms for m <= max.

    The only command served from `--cache`: rows are stored per degree and
    reused when every degree up to max is present.
    """
    cache = ResultCache(config.cache_path) if config.cache_path else None
    key = str(config.qspec)
    degrees = range(config.max_degree + 1)
    rows = None
    if cache is not None:
        cached = [cache.get(key, "dims", m) for m in degrees]
        if all(value is not None for value in cached):
            logger.info("dims served from the cache")
            rows = [DimsRow(**value) for value in cached]
    if rows is None:
        calc = HochschildCalculator(config.qspec, config.max_degree)
        rows = calc.dims()
        if cache is not None:
            for row in rows:
                cache.put(key, "dims", row.m, asdict(row))
    _emit(render_frame(dims_frame(rows), config.output))
    return EXIT_OK if all(row.ok for row in rows) else EXIT_MISMATCH


def _class_frame(calc: HochschildCalculator, label: str, value) -> pd.DataFrame:
    return pd.DataFrame(
        [
            {
                "expression": label,
                "degree": value.degree,
                "value": calc.render(value),
                "pairs": calc.render_pairs(value),
            }
        ]
    )


def cmd_basis(config: RunConfig, degree: int) -> int:
    calc = HochschildCalculator(config.qspec, config.max_degree)
    rows = [
        {
            "class": f"hh:{degree}:{n}",
            "value": calc.render(x),
            "pairs": calc.render_pairs(x),
        }
        for n, x in enumerate(calc.basis(degree))
    ]
    frame = pd.DataFrame(rows, columns=["class", "value", "pairs"])
    _emit(render_frame(frame, config.output))
    return EXIT_OK


def cmd_cup(config: RunConfig, left: str, right: str) -> int:
    calc = HochschildCalculator(config.qspec, config.max_degree)
    value = calc.cup(left, right)
    frame = _class_frame(calc, f"{left} * {right}", value)
    _emit(render_frame(frame, config.output))
    return EXIT_OK


def cmd_bracket(config: RunConfig, left: str, right: str) -> int:
    calc = HochschildCalculator(config.qspec, config.max_degree)
    value = calc.bracket(left, right)
    frame = _class_frame(calc, f"[{left}, {right}]", value)
    _emit(render_frame(frame, config.output))
    return EXIT_OK


def cmd_bv(config: RunConfig, name: str) -> int:
    calc = HochschildCalculator(config.qspec, config.max_degree)
    value = calc.bv(name)
    frame = _class_frame(calc, f"Delta({name})", value)
    _emit(render_frame(frame, config.output))
    return EXIT_OK


def cmd_verify(
    config: RunConfig, report_path: Optional[str] = None, progress: bool = False
) -> int:
    """Run the selected suites; nonzero exit on any failure."""
    calc = HochschildCalculator(config.qspec, config.max_degree)
    report = run_suites(calc, config.suites, progress=progress)
    if report_path:
        with open(report_path, "w", encoding="utf-8") as handle:
            handle.write(render_report(report, "json"))
    _emit(render_report(report, config.output))
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_cache(config: RunConfig, action: str) -> int:
    if not config.cache_path:
        raise ConfigurationError("cache needs --cache <path>.")
    cache = ResultCache(config.cache_path)
    if action == "clear":
        cache.clear()
        _emit(f"Cleared {config.cache_path}")
        return EXIT_OK
    frame = pd.DataFrame(
        cache.records(), columns=["qspec", "computation", "degree", "value"]
    )
    _emit(render_frame(frame, config.output))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--q",
        default="generic",
        help="generic, rational:p/r or zeta:s (default: generic).",
    )
    common.add_argument(
        "--max", type=int, default=8, help="Largest degree (default: 8)."
    )
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--cache", default=None, help="JSON lines cache file.")
    common.add_argument(
        "--suite",
        default="",
        help=f"Comma separated suites among {', '.join(SUITES)} "
        "(default: all).",
    )
    common.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v info, -vv debug."
    )

    parser = argparse.ArgumentParser(
        prog="zigzag",
        description="Hochschild (co)homology, cup products and BV structure "
        "of quantum zigzag algebras of type A1~.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("dims", parents=[common], help="Dimension tables.")
    basis = sub.add_parser("basis", parents=[common], help="Basis of HH^m.")
    basis.add_argument("degree", type=int)
    for name, help_text in (
        ("cup", "Cup product of two classes."),
        ("bracket", "Gerstenhaber bracket of two classes."),
    ):
        command = sub.add_parser(name, parents=[common], help=help_text)
        command.add_argument("left")
        command.add_argument("right")
    bv = sub.add_parser("bv", parents=[common], help="BV operator on a class.")
    bv.add_argument("name")
    verify = sub.add_parser("verify", parents=[common], help="Run suites.")
    verify.add_argument("--report", default=None, help="JSON report path.")
    verify.add_argument("--progress", action="store_true")
    cache = sub.add_parser("cache", parents=[common], help="Inspect the cache.")
    cache.add_argument("action", choices=["show", "clear"])
    return parser


def _configure_logging(verbosity: int):
    if verbosity:
        level = logging.INFO if verbosity == 1 else logging.DEBUG
        logging.getLogger("deel.zigzag").setLevel(level)


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point of the `zigzag` command."""
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)
    try:
        config = RunConfig.from_args(args)
        if args.command == "dims":
            return cmd_dims(config)
        if args.command == "basis":
            return cmd_basis(config, args.degree)
        if args.command == "cup":
            return cmd_cup(config, args.left, args.right)
        if args.command == "bracket":
            return cmd_bracket(config, args.left, args.right)
        if args.command == "bv":
            return cmd_bv(config, args.name)
        if args.command == "verify":
            return cmd_verify(config, args.report, args.progress)
        return cmd_cache(config, args.action)
    except USER_ERRORS as error:
        logger.error(str(error))
        print(f"error: {error}", file=sys.stderr)
        return EXIT_CONFIG
    except (ValueError, RuntimeError) as error:
        logger.exception(f"Computation failed: {error}")
        print(f"failure: {error}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
