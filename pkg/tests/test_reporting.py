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
import json

import pandas as pd
import pytest

from deel.zigzag.reporting import CheckRecord
from deel.zigzag.reporting import Report
from deel.zigzag.reporting import SuiteResult
from deel.zigzag.reporting import dims_frame
from deel.zigzag.reporting import frame_to_markdown
from deel.zigzag.reporting import parse_report
from deel.zigzag.reporting import render_frame
from deel.zigzag.reporting import render_report


@pytest.fixture
def report():
    dims = SuiteResult(
        "dims",
        [
            CheckRecord("dims", "HH^2", "6", "6", "pass"),
            CheckRecord("dims", "HC_2", "2", "2", "pass", published_value="3"),
        ],
    )
    bv = SuiteResult(
        "bv-tables",
        [
            CheckRecord("bv-tables", "[u1, w0]", "-4*w0", "4*w0", "fail"),
            CheckRecord("bv-tables", "bar [u1, w0]", "", "", "skipped"),
        ],
    )
    return Report("zeta:4", 5, [dims, bv])


def test_status(report):
    assert report.suites[0].ok
    assert not report.suites[1].ok
    assert [r.check for r in report.suites[1].failures] == ["[u1, w0]"]
    assert not report.ok


def test_json_round_trip(report):
    assert parse_report(render_report(report, "json")) == report


def test_text_report(report):
    text = render_report(report, "text")
    assert text.startswith("q = zeta:4, max degree 5: FAIL")
    assert "-4*w0" in text
    assert "HC_2" not in text


def test_markdown_report(report):
    text = render_report(report, "markdown")
    assert "| suite | checks | failures | status |" in text
    assert "| bv-tables | 2 | 1 | FAIL |" in text


def test_frame_to_markdown():
    frame = pd.DataFrame([{"a": 1, "b": None}, {"a": 2, "b": "x"}])
    assert frame_to_markdown(frame).splitlines() == [
        "| a | b |",
        "|---|---|",
        "| 1 |  |",
        "| 2 | x |",
    ]


def test_render_frame_json():
    frame = pd.DataFrame([{"m": 0, "hh": 3}])
    assert json.loads(render_frame(frame, "json")) == [{"m": 0, "hh": 3}]


def test_dims_frame(minus_one_calc):
    rows = minus_one_calc.dims(2)
    frame = dims_frame(rows)
    assert list(frame["m"]) == [0, 1, 2]
    assert list(frame["status"]) == ["ok", "ok", "ok"]
    assert "hh_codim_expected" in frame.columns
