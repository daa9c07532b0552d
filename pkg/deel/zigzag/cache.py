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
This module implements the result cache: a JSON lines file with one record
per (q, computation, degree), each carrying a format version. Only the
`dims` command reads and writes it, one row per degree under the key
(q, "dims", m). The other commands recompute their results on every run.
"""
import json
import logging
import os
from typing import Any
from typing import Dict
from typing import List
from typing import Optional
from typing import Tuple

logger = logging.getLogger(__name__)

CACHE_VERSION = 1

Key = Tuple[str, str, int]


class ResultCache:
    """Versioned JSON lines cache.

    :param str path: cache file, created on the first write.

    Records with another format version are ignored with a warning. A later
    record for the same key replaces an earlier one.

    Example::

        from deel.zigzag.cache import ResultCache

        cache = ResultCache("zigzag-cache.jsonl")
        cache.put("zeta:3", "dims", 6, {"hh": 3})
        print(cache.get("zeta:3", "dims", 6))  # {'hh': 3}
    """

    def __init__(self, path: str):
        self.path = path
        self._records: Dict[Key, Any] = {}
        self._load()

    def _load(self):
        if not os.path.exists(self.path):
            return
        with open(self.path, encoding="utf-8") as handle:
            for n, line in enumerate(handle, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    record = json.loads(line)
                except json.JSONDecodeError:
                    logger.warning(
                        f"{self.path}:{n} is not valid JSON, skipped"
                    )
                    continue
                if record.get("version") != CACHE_VERSION:
                    logger.warning(
                        f"{self.path}:{n} has format version "
                        f"{record.get('version')}, expected {CACHE_VERSION}"
                    )
                    continue
                key = (record["qspec"], record["computation"], record["degree"])
                self._records[key] = record["value"]
        logger.info(f"Loaded {len(self._records)} cached records")

    def __len__(self) -> int:
        return len(self._records)

    def get(self, qspec: str, computation: str, degree: int) -> Optional[Any]:
        return self._records.get((qspec, computation, degree))

    def put(self, qspec: str, computation: str, degree: int, value: Any):
        record = {
            "version": CACHE_VERSION,
            "qspec": qspec,
            "computation": computation,
            "degree": degree,
            "value": value,
        }
        with open(self.path, "a", encoding="utf-8") as handle:
            handle.write(json.dumps(record, sort_keys=True) + "\n")
        self._records[(qspec, computation, degree)] = value

    def records(self) -> List[Dict[str, Any]]:
        return [
            {"qspec": q, "computation": c, "degree": d, "value": v}
            for (q, c, d), v in sorted(self._records.items())
        ]

    def clear(self):
        if os.path.exists(self.path):
            os.remove(self.path)
        self._records = {}
