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
This module implements the report objects of the verification suites and
their rendering as text, markdown or JSON tables.
"""
import json
import logging
from dataclasses import asdict
from dataclasses import dataclass
from dataclasses import field
from typing import Any
from typing import Dict
from typing import List
from typing import Optional

import pandas as pd

logger = logging.getLogger(__name__)

FORMATS = ("text", "json", "markdown")


@dataclass
class CheckRecord:
    """One check of a verification suite.

    :param str suite: suite name.
    :param str check: what was checked, e.g. `HH^3`, `Delta(u1*w0)`.
    :param str expected: expected value.
    :param str computed: computed value.
    :param str status: "pass", "fail" or "skipped".
    :param str published_value: published value when it differs from
        `expected`.
    :param str oracle: bar-complex value when a failure was re-derived.
    """

    suite: str
    check: str
    expected: str
    computed: str
    status: str
    published_value: Optional[str] = None
    oracle: Optional[str] = None


@dataclass
class SuiteResult:
    name: str
    records: List[CheckRecord] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(record.status != "fail" for record in self.records)

    @property
    def failures(self) -> List[CheckRecord]:
        return [record for record in self.records if record.status == "fail"]


@dataclass
class Report:
    """Results of the suites run for one q."""

    qspec: str
    max_degree: int
    suites: List[SuiteResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(suite.ok for suite in self.suites)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Report":
        suites = [
            SuiteResult(
                suite["name"],
                [CheckRecord(**record) for record in suite["records"]],
            )
            for suite in data["suites"]
        ]
        return cls(data["qspec"], data["max_degree"], suites)

    def to_frame(self) -> pd.DataFrame:
        rows = [asdict(r) for suite in self.suites for r in suite.records]
        columns = list(CheckRecord.__dataclass_fields__)
        return pd.DataFrame(rows, columns=columns)


def frame_to_markdown(frame: pd.DataFrame) -> str:
    """Pipe table of a data frame, empty cells for missing values."""
    columns = [str(c) for c in frame.columns]
    lines = [
        "| " + " | ".join(columns) + " |",
        "|" + "|".join("---" for _ in columns) + "|",
    ]
    for row in frame.itertuples(index=False):
        cells = ["" if pd.isna(v) else str(v) for v in row]
        lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines)


def render_frame(frame: pd.DataFrame, output: str) -> str:
    """Render a table in one of :data:`FORMATS`."""
    if output == "json":
        return frame.to_json(orient="records")
    if output == "markdown":
        return frame_to_markdown(frame)
    return frame.fillna("").to_string(index=False)


def render_report(report: Report, output: str) -> str:
    """Render a verification report; JSON output round-trips through
    :func:`parse_report`."""
    if output == "json":
        return json.dumps(report.to_dict(), indent=2)
    status = "PASS" if report.ok else "FAIL"
    header = f"q = {report.qspec}, max degree {report.max_degree}: {status}"
    summary = pd.DataFrame(
        [
            {
                "suite": suite.name,
                "checks": len(suite.records),
                "failures": len(suite.failures),
                "status": "PASS" if suite.ok else "FAIL",
            }
            for suite in report.suites
        ],
        columns=["suite", "checks", "failures", "status"],
    )
    failures = report.to_frame()
    failures = failures[failures["status"] == "fail"]
    parts = [header, render_frame(summary, output)]
    if len(failures):
        parts.append(render_frame(failures, output))
    return "\n\n".join(parts)


def parse_report(text: str) -> Report:
    return Report.from_dict(json.loads(text))


def dims_frame(rows) -> pd.DataFrame:
    """Table of :class:`deel.zigzag.hochschild.DimsRow` objects with a
    status column."""
    frame = pd.DataFrame([asdict(row) for row in rows])
    frame["status"] = ["ok" if row.ok else "MISMATCH" for row in rows]
    return frame
