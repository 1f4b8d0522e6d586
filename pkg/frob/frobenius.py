"""
k-Frobenius quantities.

g_k(A) is the largest integer represented at most k times; every larger
integer has more than k representations. Two coins have closed forms for
g_k, the smallest k-representable integer, the number of k-representable
integers and the interval holding them. Larger sets are handled by searching
a saturated counting table.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from config import Config
from frob.denumerant import dp_table
from frob.errors import InvalidInputError, NotFoundBelowHorizonError
from frob.numth import DenominationSet, checked, checked_wide, require_coprime_pair

logger = logging.getLogger(__name__)


def _require_k(k: int, minimum: int) -> None:
    if k < minimum:
        raise InvalidInputError(f"k must be at least {minimum}, got {k}")


def g_k_closed(a: int, b: int, k: int) -> int:
    """g_k(a, b) = (k+1)ab - a - b."""
    require_coprime_pair(a, b)
    _require_k(k, 0)
    return checked(checked_wide((k + 1) * a * b - a - b), "g_k")


def count_nonrep(a: int, b: int) -> int:
    """Number of positive integers with no representation: (a-1)(b-1)/2."""
    require_coprime_pair(a, b)
    return checked((a - 1) * (b - 1) // 2, "gap count")


def count_k_rep(a: int, b: int, k: int) -> int:
    """Number of integers with exactly k >= 1 representations."""
    require_coprime_pair(a, b)
    _require_k(k, 1)
    ab = checked(a * b, "a*b")
    return ab - 1 if k == 1 else ab


def k_rep_interval(a: int, b: int, k: int) -> tuple[int, int]:
    """Smallest interval holding every k-representable integer, k >= 2."""
    require_coprime_pair(a, b)
    _require_k(k, 2)
    return checked(g_k_closed(a, b, k - 2) + a + b, "interval start"), g_k_closed(a, b, k)


def _start_horizon(denoms: DenominationSet, k: int, horizon: Optional[int]) -> int:
    if horizon is None:
        horizon = Config.SEARCH_HORIZON
    if horizon is None:
        horizon = 2 * (k + 1) * denoms.largest ** 2
    return max(checked_wide(horizon), denoms.smallest)


def _last_at_most(counts: np.ndarray, k: int) -> int:
    """Largest index whose count is <= k, or -1."""
    low = np.flatnonzero(counts <= k)
    return int(low[-1]) if low.size else -1


def g_k_search(denoms: DenominationSet, k: int, horizon: Optional[int] = None,
               max_cells: Optional[int] = None) -> int:
    """
    g_k for any number of coins.

    Counts saturate at k+1. Once min(A) consecutive integers all exceed k,
    adding the smallest coin keeps every later integer above k, so the last
    integer at or below k before that run is g_k. The horizon doubles until
    such a run fits inside the table.
    """
    _require_k(k, 0)
    limit = _start_horizon(denoms, k, horizon)
    window = denoms.smallest
    while True:
        table = dp_table(denoms, limit, cap=k + 1, max_cells=max_cells)
        last = _last_at_most(table.counts, k)
        if limit - last >= window:
            logger.debug("g_%d(%s) = %d found with horizon %d", k, denoms, last, limit)
            return last
        logger.debug("No termination window below %d for A={%s}, k=%d; doubling",
                     limit, denoms, k)
        limit *= 2


def smallest_k_rep(denoms: DenominationSet, k: int, horizon: Optional[int] = None,
                   max_cells: Optional[int] = None) -> int:
    """Least positive n with exactly k representations, k >= 1."""
    _require_k(k, 1)
    if denoms.d == 2:
        a, b = denoms.pair
        if k == 1:
            return min(a, b)
        return checked(checked_wide(a * b * (k - 1)), "smallest k-representable")

    bound = g_k_search(denoms, k, horizon=horizon, max_cells=max_cells)
    if bound >= 0:
        # Cap k+2 separates "exactly k" from "more than k".
        table = dp_table(denoms, bound, cap=k + 2, max_cells=max_cells)
        hits = np.flatnonzero(table.counts[1:] == k)
        if hits.size:
            return int(hits[0]) + 1
    raise NotFoundBelowHorizonError(
        f"no integer up to {bound} has exactly {k} representations over A={{{denoms}}}")


def list_k_rep(denoms: DenominationSet, k: int, horizon: Optional[int] = None,
               max_cells: Optional[int] = None) -> list[int]:
    """
    Every positive n with exactly k representations, ascending.

    Nothing above g_k qualifies, so a table up to g_k is complete. For k = 0
    this is the gap set of the numerical semigroup generated by A.
    """
    _require_k(k, 0)
    if denoms.d == 2:
        bound = g_k_closed(*denoms.pair, k)
    else:
        bound = g_k_search(denoms, k, horizon=horizon, max_cells=max_cells)
    if bound < 0:
        return []
    table = dp_table(denoms, bound, cap=k + 2, max_cells=max_cells)
    return [int(n) + 1 for n in np.flatnonzero(table.counts[1:] == k)]


def gaps(denoms: DenominationSet, max_cells: Optional[int] = None) -> list[int]:
    """Non-representable positive integers."""
    return list_k_rep(denoms, 0, max_cells=max_cells)


def is_representable(denoms: DenominationSet, n: int) -> bool:
    if n < 0:
        return False
    if n == 0:
        return True
    if denoms.d == 2:
        a, b = denoms.pair
        if n > g_k_closed(a, b, 0):
            return True
    return dp_table(denoms, n, cap=1)[n] > 0


@dataclass(frozen=True)
class KFrobeniusReport:
    denoms: DenominationSet
    k: int
    g_k: int
    smallest_k_rep: Optional[int]
    count_k_rep: int
    interval: Optional[tuple[int, int]]

    def as_dict(self) -> dict:
        return {
            'denoms': list(self.denoms),
            'k': self.k,
            'g_k': self.g_k,
            'smallest_k_rep': self.smallest_k_rep,
            'count_k_rep': self.count_k_rep,
            'interval': list(self.interval) if self.interval else None,
        }


def kfrobenius_report(denoms: DenominationSet, k: int, horizon: Optional[int] = None,
                      max_cells: Optional[int] = None) -> KFrobeniusReport:
    """All k-Frobenius quantities for one (A, k)."""
    _require_k(k, 0)
    if denoms.d == 2:
        a, b = denoms.pair
        g = g_k_closed(a, b, k)
        if k == 0:
            total = count_nonrep(a, b)
            return KFrobeniusReport(denoms, k, g, None, total, (1, g) if total else None)
        low = smallest_k_rep(denoms, k)
        interval = k_rep_interval(a, b, k) if k >= 2 else (low, g)
        return KFrobeniusReport(denoms, k, g, low, count_k_rep(a, b, k), interval)

    g = g_k_search(denoms, k, horizon=horizon, max_cells=max_cells)
    members = list_k_rep(denoms, k, horizon=horizon, max_cells=max_cells)
    interval = (members[0], members[-1]) if members else None
    low = None
    if k >= 1 and members:
        low = members[0]
    elif k >= 1:
        logger.info("A={%s} has no integer with exactly %d representations", denoms, k)
    return KFrobeniusReport(denoms, k, g, low, len(members), interval)
