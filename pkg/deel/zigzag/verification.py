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
This module implements the verification suites: exact checks of the
complex laws, dimension formulas, ring presentations, homotopies, chain
maps, BV and bracket tables, and the bar-complex cross-checks.

Each suite takes a :class:`deel.zigzag.hochschild.HochschildCalculator`
and returns a :class:`deel.zigzag.reporting.SuiteResult`.
"""
import logging
from typing import Callable
from typing import Dict
from typing import Iterable
from typing import List
from typing import Optional
from typing import Tuple

from tqdm import tqdm

from deel.zigzag.api import closed_forms
from deel.zigzag.api.algebra import Basis
from deel.zigzag.api.algebra import e
from deel.zigzag.api.algebra import source
from deel.zigzag.api.algebra import target
from deel.zigzag.api.bv import gerstenhaber_ideal_quotient
from deel.zigzag.api.complexes import HHClass
from deel.zigzag.api.resolution import generator_element
from deel.zigzag.api.resolution import generators
from deel.zigzag.api.resolution import p_basis
from deel.zigzag.api.resolution import reduced_words
from deel.zigzag.api.utils import WindowExceeded
from deel.zigzag.api.utils import accumulate
from deel.zigzag.hochschild import HochschildCalculator
from deel.zigzag.reporting import CheckRecord
from deel.zigzag.reporting import Report
from deel.zigzag.reporting import SuiteResult

logger = logging.getLogger(__name__)


def _progress(iterable: Iterable, desc: str, enabled: bool):
    return tqdm(
        iterable, desc=desc, dynamic_ncols=True, ascii=True, disable=not enabled
    )


def _record(
    suite: str,
    check: str,
    expected,
    computed,
    published_value=None,
    oracle: Optional[str] = None,
) -> CheckRecord:
    status = "pass" if expected == computed else "fail"
    published = None
    if published_value is not None and published_value != expected:
        published = str(published_value)
    return CheckRecord(
        suite, check, str(expected), str(computed), status, published, oracle
    )


def _skipped(suite: str, check: str) -> CheckRecord:
    return CheckRecord(suite, check, "", "", "skipped")


def _difference(x: dict, y: dict) -> dict:
    result = dict(x)
    for key, c in y.items():
        accumulate(result, key, -c)
    return result


def complex_laws(
    calc: HochschildCalculator, progress: bool = False
) -> SuiteResult:
    """d∘d = 0 on every generator, τ∘τ = 0 and σ∘σ = 0."""
    suite = SuiteResult("complex-laws")
    resolution, complexes = calc.resolution, calc.complexes
    for m in _progress(range(2, calc.max_degree + 1), suite.name, progress):
        failures = 0
        for g in generators(m):
            image = resolution.apply_d(m, generator_element(g, calc.field.one))
            failures += bool(resolution.apply_d(m - 1, image))
        suite.records.append(
            _record(suite.name, f"d{m-1}*d{m}", 0, failures)
        )
        tau = complexes.tau(m - 1).compose(complexes.tau(m))
        suite.records.append(
            _record(suite.name, f"tau{m-1}*tau{m}", True, tau.is_zero())
        )
        sigma = complexes.sigma(m).compose(complexes.sigma(m - 1))
        suite.records.append(
            _record(suite.name, f"sigma{m}*sigma{m-1}", True, sigma.is_zero())
        )
    return suite


def dims(calc: HochschildCalculator, progress: bool = False) -> SuiteResult:
    """Ranks and dimensions against their closed forms, and the listed
    cocycles against the computed cohomology."""
    suite = SuiteResult("dims")
    for row in calc.dims():
        m = row.m
        suite.records += [
            _record(
                suite.name,
                f"rank tau_{m}",
                row.rank_tau_expected,
                row.rank_tau,
                row.rank_tau_printed,
            ),
            _record(suite.name, f"HH_{m}", row.hh_expected, row.hh),
            _record(suite.name, f"HH^{m}", row.hh_codim_expected, row.hh_codim),
            _record(
                suite.name, f"HC_{m}", row.hc_expected, row.hc, row.hc_printed
            ),
        ]
    complexes = calc.complexes
    top = min(calc.max_degree, 12)
    for m in _progress(range(top + 1), "cocycles", progress):
        cocycles = closed_forms.expected_cocycles(calc.field, m)
        printed = closed_forms.expected_cocycles(calc.field, m, printed=True)
        open_cochains = sum(not complexes.is_cocycle(m, x) for x in cocycles)
        printed_open = sum(not complexes.is_cocycle(m, x) for x in printed)
        if printed_open:
            logger.warning(
                f"{printed_open} published cochains in degree {m} are not "
                "cocycles"
            )
        spans = complexes.span_check(m, cocycles)
        printed_spans = complexes.span_check(m, printed)
        suite.records.append(
            _record(
                suite.name,
                f"listed cochains closed in degree {m}",
                0,
                open_cochains,
                printed_open,
            )
        )
        suite.records.append(
            _record(
                suite.name,
                f"cocycles span HH^{m}",
                True,
                spans,
                printed_spans,
            )
        )
    return suite


def ring(calc: HochschildCalculator, progress: bool = False) -> SuiteResult:
    """Relations, generation and nilpotent quotient of the presentation,
    and coherence of the cup product."""
    suite = SuiteResult("ring")
    bound = calc.max_degree
    cup = calc.cup_product
    report = calc.ring.verify_presentation(bound, oracle=calc.oracle)
    for status in report.relations:
        if status.status == "skipped":
            suite.records.append(
                CheckRecord(suite.name, status.relation, "0", "", "skipped")
            )
            continue
        computed = "0" if status.status == "pass" else calc.complexes.to_str(
            status.witness
        )
        suite.records.append(
            _record(
                suite.name,
                status.relation,
                "0",
                computed,
                oracle=status.oracle_status,
            )
        )
    for m, (rank, dim) in report.generation.items():
        suite.records.append(
            _record(suite.name, f"products span HH^{m}", dim, rank)
        )
    quotient = calc.ring.nilpotent_quotient(bound)
    suite.records.append(
        _record(
            suite.name, "HH*/N dimensions", quotient.expected, quotient.computed
        )
    )
    for name, index in quotient.nilpotency.items():
        suite.records.append(
            _record(
                suite.name,
                f"{name} nilpotent",
                quotient.declared[name],
                index is not None,
            )
        )
    for m in _progress(range(1, bound + 1), "diagonal", progress):
        defects = sum(bool(cup.chain_map_defect(g)) for g in generators(m))
        suite.records.append(_record(suite.name, f"b*Delta_{m}", 0, defects))
    for n in _progress(range(bound + 1), "cup", progress):
        mismatches = 0
        for m in range(n + 1):
            for x in calc.complexes.hh_basis(m):
                for y in calc.complexes.hh_basis(n - m):
                    closed = cup.cup_closed_form(
                        x.representative, y.representative
                    )
                    diagonal = cup.cup_via_diagonal(
                        x.representative, y.representative
                    )
                    mismatches += closed != diagonal
        suite.records.append(
            _record(
                suite.name,
                f"closed-form cup = diagonal cup, degree {n}",
                0,
                mismatches,
            )
        )
    suite.records += _ring_laws(calc, suite.name, bound)
    return suite


def _ring_laws(
    calc: HochschildCalculator, name: str, bound: int
) -> List[CheckRecord]:
    k = calc.field
    cup = calc.cup_product
    ring_structure = calc.ring
    gens = [ring_structure.generator_class(n) for n in calc.presentation.names]
    unit = ring_structure.monomial_class(())
    records = []
    unit_failures = sum(
        cup.cup(unit, x).coordinates != x.coordinates for x in gens
    )
    records.append(_record(name, "unit law", 0, unit_failures))
    commutativity = 0
    for x in gens:
        for y in gens:
            if x.degree + y.degree > bound:
                continue
            left = cup.cup(x, y).coordinates
            sign = k.sign(x.degree * y.degree)
            right = tuple(sign * c for c in cup.cup(y, x).coordinates)
            commutativity += left != right
    records.append(_record(name, "graded commutativity", 0, commutativity))
    associativity = 0
    for x in gens:
        for y in gens:
            for z in gens:
                if x.degree + y.degree + z.degree > bound:
                    continue
                left = cup.cup(cup.cup(x, y), z).coordinates
                right = cup.cup(x, cup.cup(y, z)).coordinates
                associativity += left != right
    records.append(_record(name, "associativity", 0, associativity))
    return records


def homotopy(calc: HochschildCalculator, progress: bool = False) -> SuiteResult:
    """Weak self-homotopy identities of t and s, and the closed-form Ψ
    values on words made of arrow runs and socle elements."""
    suite = SuiteResult("homotopy")
    k = calc.field
    resolution, comparison = calc.resolution, calc.comparison
    top = min(calc.max_degree, 8)
    for m in _progress(range(top + 1), "t", progress):
        failures = 0
        nilpotent = 0
        for key in p_basis(m):
            x = {key: k.one}
            t_x = comparison.homotopy_t(m, x)
            value = resolution.apply_d(m + 1, t_x)
            if m == 0:
                lower = comparison.homotopy_t_unit(resolution.augment(x))
            else:
                lower = comparison.homotopy_t(m - 1, resolution.apply_d(m, x))
            for key2, c in lower.items():
                accumulate(value, key2, c)
            failures += value != x
            nilpotent += bool(comparison.homotopy_t(m + 1, t_x))
        suite.records.append(
            _record(suite.name, f"dt + td on P_{m}", 0, failures)
        )
        suite.records.append(
            _record(suite.name, f"t_{m+1}*t_{m}", 0, nilpotent)
        )
    for m in _progress(range(min(calc.max_degree, 4) + 1), "s", progress):
        failures = 0
        for word in reduced_words(m):
            if m == 0:
                chains = [
                    (a, b)
                    for a in Basis
                    for b in Basis
                    if target(a) == source(b)
                ]
            else:
                chains = [
                    (a,) + word + (e(target(word[-1])),)
                    for a in Basis
                    if target(a) == source(word[0])
                ]
            for chain in chains:
                x = {chain: k.one}
                value = resolution.bar_d(comparison.homotopy_s(x))
                correction = comparison.homotopy_s(resolution.bar_d(x))
                for key, c in correction.items():
                    accumulate(value, key, c)
                failures += value != x
        suite.records.append(
            _record(suite.name, f"ds + sd on bar degree {m}", 0, failures)
        )
    for m in range(1, min(top, 5) + 1):
        for label, word, expected in closed_forms.psi_closed_forms(k, m):
            computed = comparison.psi_word(m, word)
            suite.records.append(
                _record(
                    suite.name,
                    f"Psi_{m} on {label}",
                    True,
                    computed == expected,
                )
            )
    return suite


def chainmaps(
    calc: HochschildCalculator, progress: bool = False
) -> SuiteResult:
    """Φ and Ψ commute with the differentials; Ψ∘Φ is the identity on
    cohomology."""
    suite = SuiteResult("chainmaps")
    k = calc.field
    resolution, comparison = calc.resolution, calc.comparison
    for m in _progress(range(1, min(calc.max_degree, 8) + 1), "phi", progress):
        failures = 0
        for g in generators(m):
            x = generator_element(g, k.one)
            left = resolution.bar_d(resolution.phi(x))
            right = resolution.phi(resolution.apply_d(m, x))
            failures += bool(_difference(left, right))
        suite.records.append(
            _record(suite.name, f"Phi_{m}", 0, failures)
        )
    for m in _progress(range(1, min(calc.max_degree, 5) + 1), "psi", progress):
        failures = 0
        for word in reduced_words(m):
            ends = (e(source(word[0])),), (e(target(word[-1])),)
            chain = {ends[0] + word + ends[1]: k.one}
            left = resolution.apply_d(m, comparison.psi(m, chain))
            right = comparison.psi(m - 1, resolution.bar_d(chain))
            failures += bool(_difference(left, right))
        suite.records.append(
            _record(suite.name, f"Psi_{m}", 0, failures)
        )
    top = min(calc.max_degree, 6, calc.oracle.window)
    for m in _progress(range(top + 1), "round trip", progress):
        failures = sum(
            calc.oracle.round_trip(x).coordinates != x.coordinates
            for x in calc.complexes.hh_basis(m)
        )
        suite.records.append(
            _record(suite.name, f"Psi*Phi on HH^{m}", 0, failures)
        )
    return suite


def bv_tables(
    calc: HochschildCalculator, progress: bool = False
) -> SuiteResult:
    """BV and bracket tables, Δ∘Δ = 0, the Leibniz rule and the
    Gerstenhaber ideal quotient."""
    suite = SuiteResult("bv-tables")
    bound = calc.max_degree
    for status in calc.tables.verify_bv_tables(bound):
        suite.records.append(
            CheckRecord(
                suite.name,
                status.name,
                status.expected,
                status.computed,
                status.status,
                oracle=status.oracle,
            )
        )
    bv = calc.bv_operator
    for m in _progress(range(2, min(bound, 6) + 1), "delta squared", progress):
        failures = sum(
            not bv.delta(bv.delta(x)).is_zero
            for x in calc.complexes.hh_basis(m)
        )
        suite.records.append(
            _record(suite.name, f"Delta^2 on HH^{m}", 0, failures)
        )
    suite.records += _leibniz(calc, suite.name, bound)
    ideal = gerstenhaber_ideal_quotient(calc.bv_operator, calc.ring, bound - 1)
    suite.records.append(
        _record(suite.name, "HH*/G dimensions", ideal.expected, ideal.computed)
    )
    return suite


def _leibniz(
    calc: HochschildCalculator, name: str, bound: int
) -> List[CheckRecord]:
    """[f⊔g, h] = [f,h]⊔g + (-1)^{|f|(|h|-1)} f⊔[g,h] on the generator
    triples of the presentation; triples above `bound` are skipped."""
    k = calc.field
    bv, cup = calc.bv_operator, calc.cup_product
    presentation = calc.presentation
    degrees = {n: presentation.generator(n).degree for n in presentation.names}
    gens = {
        n: calc.ring.generator_class(n)
        for n, d in degrees.items()
        if d <= bound
    }
    brackets: Dict[Tuple[str, str], HHClass] = {}

    def bracket(a: str, b: str):
        if (a, b) not in brackets:
            brackets[(a, b)] = bv.bracket(gens[a], gens[b])
        return brackets[(a, b)]

    failures, checked, skipped = 0, 0, 0
    for a in degrees:
        for b in degrees:
            for c in degrees:
                total = degrees[a] + degrees[b] + degrees[c]
                if total == 0:
                    continue
                if total > bound:
                    skipped += 1
                    continue
                f, g, h = gens[a], gens[b], gens[c]
                left = bv.bracket(cup.cup(f, g), h)
                fh, gh = bracket(a, c), bracket(b, c)
                terms = [
                    (k.one, None if fh.degree < 0 else cup.cup(fh, g)),
                    (
                        k.sign(f.degree * (h.degree - 1)),
                        None if gh.degree < 0 else cup.cup(f, gh),
                    ),
                ]
                right = bv.combine(total - 1, terms)
                failures += left.coordinates != right.coordinates
                checked += 1
    logger.info(f"Leibniz rule checked on {checked} generator triples")
    records = [_record(name, "Leibniz rule", 0, failures)]
    if skipped:
        records.append(
            CheckRecord(
                name,
                f"Leibniz rule above degree {bound}",
                "0",
                f"{skipped} triples",
                "skipped",
            )
        )
    return records


def oracle_crosscheck(
    calc: HochschildCalculator, progress: bool = False
) -> SuiteResult:
    """Dimensions, cup products and brackets recomputed on the bar complex."""
    suite = SuiteResult("oracle-crosscheck")
    oracle, complexes = calc.oracle, calc.complexes
    top = min(calc.max_degree, 5)
    for m in _progress(range(top + 1), "bar dims", progress):
        if m > oracle.window:
            suite.records.append(_skipped(suite.name, f"bar HH^{m}"))
            continue
        suite.records.append(
            _record(
                suite.name,
                f"bar HH^{m}",
                complexes.hh_codim(m),
                oracle.hh_dim_oracle(m),
            )
        )
    for n in _progress(range(top + 1), "bar cup", progress):
        if n > oracle.window:
            suite.records.append(_skipped(suite.name, f"bar cup, degree {n}"))
            continue
        mismatches = 0
        for m in range(n + 1):
            for x in complexes.hh_basis(m):
                for y in complexes.hh_basis(n - m):
                    left = calc.cup_product.cup(x, y).coordinates
                    right = oracle.cup_oracle(x, y).coordinates
                    mismatches += left != right
        suite.records.append(
            _record(suite.name, f"bar cup, degree {n}", 0, mismatches)
        )
    for a, b in calc.presentation.bracket_pairs(min(calc.max_degree, 5) - 1):
        x, y = calc.ring.generator_class(a), calc.ring.generator_class(b)
        try:
            right = oracle.bracket_oracle(x, y)
        except WindowExceeded:
            suite.records.append(_skipped(suite.name, f"bar [{a}, {b}]"))
            continue
        left = calc.bv_operator.bracket(x, y)
        suite.records.append(
            _record(
                suite.name,
                f"bar [{a}, {b}]",
                calc.render(left),
                calc.render(right),
            )
        )
    return suite


SUITES: Dict[str, Callable[..., SuiteResult]] = {
    "complex-laws": complex_laws,
    "dims": dims,
    "ring": ring,
    "homotopy": homotopy,
    "chainmaps": chainmaps,
    "bv-tables": bv_tables,
    "oracle-crosscheck": oracle_crosscheck,
}


def run_suites(
    calc: HochschildCalculator,
    names: Optional[List[str]] = None,
    progress: bool = False,
) -> Report:
    """Run the named suites (all by default) and collect their results."""
    names = list(SUITES) if not names else names
    report = Report(str(calc.qspec), calc.max_degree)
    for name in names:
        logger.info(f"Running suite {name}")
        result = SUITES[name](calc, progress=progress)
        logger.info(
            f"Suite {name}: {len(result.records)} checks, "
            f"{len(result.failures)} failures"
        )
        report.suites.append(result)
    return report
