"""
Self-verification suites: each suite checks one family of identities on one
denomination set and counts passes and failures.
"""
import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from rich.table import Table

from frob.cli.config import Limits
from frob.cli.utils import console
from frob.denumerant import Method, dp_table, popoviciu_count, q_count
from frob.errors import MethodMismatchError
from frob.frobenius import (
    count_k_rep,
    count_nonrep,
    g_k_closed,
    g_k_search,
    k_rep_interval,
    kfrobenius_report,
    list_k_rep,
    smallest_k_rep,
)
from frob.numth import DenominationSet
from frob.oracle import oracle_count
from frob.residues import (
    residue_count,
    tolerance_for,
    unity_sum,
    verify_exercise4,
    verify_exercise5,
)

logger = logging.getLogger(__name__)

PAIR_SUITES = (
    'popoviciu', 'periodicity', 'reflection', 'asymptotic', 'residues',
    'gk', 'peaks', 'sylvester', 'kcount',
)
SET_SUITES = ('general',)
SUITES = PAIR_SUITES + SET_SUITES
MAX_REPORTED_FAILURES = 10


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list = field(default_factory=list)

    def check(self, ok: bool, detail: str) -> None:
        if ok:
            self.passed += 1
            return
        self.failed += 1
        if len(self.failures) < MAX_REPORTED_FAILURES:
            self.failures.append(detail)

    def merge(self, other: 'SuiteResult') -> None:
        self.passed += other.passed
        self.failed += other.failed
        room = MAX_REPORTED_FAILURES - len(self.failures)
        self.failures.extend(other.failures[:max(room, 0)])

    def as_dict(self) -> dict:
        return {'passed': self.passed, 'failed': self.failed}


def coprime_pairs(limit: int) -> list:
    """All (a, b) with 1 <= a < b <= limit and gcd(a, b) = 1."""
    return [(a, b) for b in range(2, limit + 1) for a in range(1, b) if math.gcd(a, b) == 1]


class PairChecks:
    """Identities that hold for every two-coin set {a, b}."""

    @staticmethod
    def popoviciu(a, b, max_k, limits):
        result = SuiteResult('popoviciu')
        denoms = DenominationSet.of(a, b)
        top = 3 * a * b
        table = dp_table(denoms, top, max_cells=limits.max_table_cells)
        for n in range(top + 1):
            closed = popoviciu_count(a, b, n)
            brute = oracle_count(denoms, n)
            result.check(closed == table[n] == brute,
                         f"A={{{a},{b}}} n={n}: popoviciu={closed} dp={table[n]} oracle={brute}")
        return result

    @staticmethod
    def periodicity(a, b, max_k, limits):
        result = SuiteResult('periodicity')
        ab = a * b
        table = dp_table(DenominationSet.of(a, b), 3 * ab, max_cells=limits.max_table_cells)
        for n in range(2 * ab + 1):
            result.check(table[n + ab] == table[n] + 1,
                         f"A={{{a},{b}}} n={n}: p(n+ab)={table[n + ab]} p(n)={table[n]}")
        return result

    @staticmethod
    def reflection(a, b, max_k, limits):
        result = SuiteResult('reflection')
        ab = a * b
        table = dp_table(DenominationSet.of(a, b), ab, max_cells=limits.max_table_cells)
        for n in range(1, ab):
            if n % a == 0 or n % b == 0:
                continue
            result.check(table[n] + table[ab - n] == 1,
                         f"A={{{a},{b}}} n={n}: p(n)={table[n]} p(ab-n)={table[ab - n]}")
        return result

    @staticmethod
    def asymptotic(a, b, max_k, limits):
        result = SuiteResult('asymptotic')
        ab = a * b
        table = dp_table(DenominationSet.of(a, b), 3 * ab, max_cells=limits.max_table_cells)
        for n in range(3 * ab + 1):
            error = table[n] - Fraction(n, ab)
            result.check(-1 < error <= 1, f"A={{{a},{b}}} n={n}: p(n) - n/ab = {error}")
        return result

    @staticmethod
    def residues(a, b, max_k, limits):
        result = SuiteResult('residues')
        tol = tolerance_for(a, b)
        for n in range(a * b + 1):
            for modulus, other in ((a, b), (b, a)):
                if modulus < 2:
                    continue
                holds, residual = verify_exercise4(modulus, n, tol)
                result.check(holds, f"root sum mod {modulus} n={n}: residual {residual:.3e}")
                holds, residual = verify_exercise5(modulus, other, n, tol)
                result.check(holds, f"substitution mod {modulus} b={other} n={n}: "
                                    f"residual {residual:.3e}")
                shifted = unity_sum(modulus, n).value - unity_sum(modulus, n % modulus).value
                result.check(abs(shifted) <= tol, f"root sum mod {modulus} not periodic at n={n}")
            if n >= 1:
                exact = popoviciu_count(a, b, n)
                approx = residue_count(a, b, n)
                result.check(abs(approx - exact) <= 1e-6,
                             f"A={{{a},{b}}} n={n}: residues give {approx}, exact {exact}")
        return result

    @staticmethod
    def gk(a, b, max_k, limits):
        result = SuiteResult('gk')
        denoms = DenominationSet.of(a, b)
        ab = a * b
        for k in range(max_k + 1):
            closed = g_k_closed(a, b, k)
            found = g_k_search(denoms, k, horizon=limits.horizon,
                               max_cells=limits.max_table_cells)
            result.check(closed == found, f"A={{{a},{b}}} k={k}: closed {closed}, search {found}")
            if closed >= 0:
                brute = oracle_count(denoms, closed)
                result.check(brute == k, f"A={{{a},{b}}} k={k}: p(g_k)={brute}")
            table = dp_table(denoms, max(closed, 0) + 2 * ab, max_cells=limits.max_table_cells)
            above = [n for n in range(closed + 1, closed + 2 * ab + 1) if n >= 0 and table[n] <= k]
            result.check(not above, f"A={{{a},{b}}} k={k}: p(n) <= k above g_k at {above[:5]}")
            q = q_count(denoms, (k + 1) * ab, Method.POPOVICIU)
            result.check(q == k, f"A={{{a},{b}}} k={k}: q((k+1)ab)={q}")
        return result

    @staticmethod
    def peaks(a, b, max_k, limits):
        result = SuiteResult('peaks')
        ab = a * b
        table = dp_table(DenominationSet.of(a, b), max(max_k, 1) * ab,
                         max_cells=limits.max_table_cells)
        for k in range(1, max_k + 1):
            peak = table[k * ab]
            below = int(table.counts[:k * ab].max())
            result.check(peak == k + 1 and below < peak,
                         f"A={{{a},{b}}} k={k}: p(k*ab)={peak}, max below {below}")
        return result

    @staticmethod
    def sylvester(a, b, max_k, limits):
        result = SuiteResult('sylvester')
        denoms = DenominationSet.of(a, b)
        g = g_k_closed(a, b, 0)
        missing = sum(1 for n in range(1, g + 1) if oracle_count(denoms, n) == 0)
        expected = count_nonrep(a, b)
        result.check(missing == expected,
                     f"A={{{a},{b}}}: {missing} gaps found, {expected} expected")
        if (a - 1) * (b - 1):
            result.check(2 * missing == (a - 1) * (b - 1),
                         f"A={{{a},{b}}}: gaps are not half of [1, (a-1)(b-1)]")
        for n in range(1, a * b):
            ways = oracle_count(denoms, n)
            result.check(ways <= 1, f"A={{{a},{b}}} n={n}: {ways} representations below ab")
        return result

    @staticmethod
    def kcount(a, b, max_k, limits):
        result = SuiteResult('kcount')
        denoms = DenominationSet.of(a, b)
        for k in range(1, max_k + 1):
            members = list_k_rep(denoms, k, max_cells=limits.max_table_cells)
            expected = count_k_rep(a, b, k)
            result.check(len(members) == expected,
                         f"A={{{a},{b}}} k={k}: {len(members)} listed, {expected} expected")
            if not members:
                continue
            low = smallest_k_rep(denoms, k)
            result.check(members[0] == low, f"A={{{a},{b}}} k={k}: min {members[0]}, expected {low}")
            span = k_rep_interval(a, b, k) if k >= 2 else (min(a, b), g_k_closed(a, b, 1))
            result.check((members[0], members[-1]) == span,
                         f"A={{{a},{b}}} k={k}: span {(members[0], members[-1])}, expected {span}")
            report = kfrobenius_report(denoms, k)
            result.check(report.count_k_rep == len(members) and report.interval == span,
                         f"A={{{a},{b}}} k={k}: report disagrees with enumeration")
        return result


class SetChecks:
    """Checks that apply to any denomination set."""

    @staticmethod
    def general(denoms, max_k, limits):
        result = SuiteResult('general')
        g = g_k_search(denoms, 0, horizon=limits.horizon, max_cells=limits.max_table_cells)
        if g >= 0:
            result.check(oracle_count(denoms, g) == 0, f"A={{{denoms}}}: g={g} is representable")
        for n in range(max(g, 0) + 1, g + denoms.smallest + 1):
            result.check(oracle_count(denoms, n) > 0,
                         f"A={{{denoms}}}: {n} above g={g} is not representable")
        top = 300
        table = dp_table(denoms, top, max_cells=limits.max_table_cells)
        for n in range(top + 1):
            brute = oracle_count(denoms, n)
            result.check(table[n] == brute, f"A={{{denoms}}} n={n}: dp={table[n]} oracle={brute}")
        return result


def _run_cell(suite: str, denoms: DenominationSet, max_k: int, limits: Limits) -> SuiteResult:
    started = time.perf_counter()
    if suite in SET_SUITES:
        outcome = getattr(SetChecks, suite)(denoms, max_k, limits)
    else:
        a, b = denoms.pair
        outcome = getattr(PairChecks, suite)(a, b, max_k, limits)
    logger.debug("Suite %s on A={%s}: %d passed, %d failed in %.1f ms", suite, denoms,
                 outcome.passed, outcome.failed, (time.perf_counter() - started) * 1000)
    return outcome


def run_verification(sets: list, suites: tuple, max_k: int, limits: Limits,
                     workers: Optional[int] = None) -> dict:
    """Run every applicable (suite, set) cell and merge the results per suite."""
    cells = [(suite, denoms) for denoms in sets for suite in suites
             if suite in SET_SUITES or denoms.d == 2]
    covered = [suite for suite in suites if any(cell[0] == suite for cell in cells)]
    if not covered:
        raise MethodMismatchError(
            f"suite(s) {', '.join(suites)} need two denominations; "
            f"use --suite general for larger sets")
    for suite in suites:
        if suite not in covered:
            logger.info("Suite %s does not apply to any requested set; skipped", suite)
    results = {suite: SuiteResult(suite) for suite in covered}
    with ThreadPoolExecutor(max_workers=workers) as pool:
        outcomes = pool.map(lambda cell: _run_cell(cell[0], cell[1], max_k, limits), cells)
        for outcome in outcomes:
            results[outcome.name].merge(outcome)
    for outcome in results.values():
        for detail in outcome.failures:
            logger.warning("%s failed: %s", outcome.name, detail)
    return results


def summary_table(results: dict) -> Table:
    table = Table(title="Verification Summary")
    table.add_column("Suite", style="cyan")
    table.add_column("Status", style="magenta")
    table.add_column("Passed", justify="right")
    table.add_column("Failed", justify="right")
    for name, outcome in results.items():
        status = "[green]OK[/green]" if outcome.failed == 0 else "[red]FAILED[/red]"
        table.add_row(name, status, str(outcome.passed), str(outcome.failed))
    return table


def print_summary(results: dict) -> None:
    console.print(summary_table(results))
