"""
The restricted partition function p_A(n) and its all-parts variant q_A(n).

Two backends compute p_A(n): Popoviciu's closed form for two coins and a
coin-combination dynamic program for any number of coins. A third,
brute-force backend lives in frob.oracle.
"""
from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from config import Config
from frob.errors import (
    FrobOverflowError,
    InternalError,
    InvalidInputError,
    MethodMismatchError,
    ResourceLimitError,
)
from frob.numth import (
    INT64_MAX,
    DenominationSet,
    checked,
    checked_wide,
    mod_inverse,
    require_coprime_pair,
)

logger = logging.getLogger(__name__)


class CountValue(int):
    """Exact nonnegative representation count that refuses to leave int64."""

    def __new__(cls, value: int):
        value = int(value)
        if value < 0:
            raise InvalidInputError(f"a representation count cannot be negative, got {value}")
        checked(value, "representation count")
        return super().__new__(cls, value)

    def __add__(self, other):
        if isinstance(other, int):
            return CountValue(int(self) + int(other))
        return NotImplemented

    __radd__ = __add__

    def __repr__(self):
        return f"CountValue({int(self)})"


class Method(enum.Enum):
    AUTO = 'auto'
    POPOVICIU = 'popoviciu'
    DP = 'dp'
    ORACLE = 'oracle'


def resolve_method(denoms: DenominationSet, method: Method | str = Method.AUTO) -> Method:
    """Pick the concrete backend for a count query."""
    method = Method(method)
    if method is Method.AUTO:
        return Method.POPOVICIU if denoms.d == 2 else Method.DP
    if method is Method.POPOVICIU and denoms.d != 2:
        raise MethodMismatchError(
            f"the popoviciu backend needs exactly two denominations, got {denoms.d}")
    return method


def popoviciu_count(a: int, b: int, n: int) -> CountValue:
    """
    p_{a,b}(n) = n/ab - {b^-1 n / a} - {a^-1 n / b} + 1, evaluated in integers.

    With t1 = b^-1 (n mod a) mod a and t2 = a^-1 (n mod b) mod b the count is
    (n - t1*b - t2*a)/(ab) + 1, and the division is exact.
    """
    require_coprime_pair(a, b)
    checked(n, "n")
    if n < 0:
        return CountValue(0)
    ab = checked_wide(a * b, "a*b")
    t1 = mod_inverse(b % a, a) * (n % a) % a if a > 1 else 0
    t2 = mod_inverse(a % b, b) * (n % b) % b if b > 1 else 0
    numer = checked_wide(n - t1 * b - t2 * a)
    quotient, remainder = divmod(numer, ab)
    if remainder != 0:
        raise InternalError(
            f"inexact division in Popoviciu's formula for a={a}, b={b}, n={n}")
    return CountValue(quotient + 1)


@dataclass(frozen=True, eq=False)
class DenumerantTable:
    """p_A(0..limit), saturated at cap when cap is given."""
    denoms: DenominationSet
    limit: int
    counts: np.ndarray
    cap: Optional[int] = None

    def __getitem__(self, n: int) -> int:
        if n < 0:
            return 0
        if n > self.limit:
            raise IndexError(f"{n} is beyond the table limit {self.limit}")
        return int(self.counts[n])

    def __len__(self):
        return self.limit + 1

    def count(self, n: int) -> CountValue:
        return CountValue(self[n])

    def rows(self) -> Iterator[tuple[int, int]]:
        for n, c in enumerate(self.counts.tolist()):
            yield n, c

    @property
    def saturated(self) -> bool:
        return self.cap is not None


def _saturating_cumsum(grid: np.ndarray, cap: int) -> np.ndarray:
    """Running sums down axis 0, clamped at cap. Entries of grid lie in [0, cap]."""
    if cap * grid.shape[0] <= INT64_MAX:
        return np.minimum(np.cumsum(grid, axis=0), cap)
    summed = grid.copy()
    for i in range(1, summed.shape[0]):
        # min(prev, cap - row) + row never exceeds cap, so nothing wraps.
        summed[i] = np.minimum(summed[i - 1], cap - summed[i]) + summed[i]
    return summed


def dp_table(denoms: DenominationSet, limit: int, cap: Optional[int] = None,
             max_cells: Optional[int] = None) -> DenumerantTable:
    """
    Build p_A(0..limit) by folding in one coin at a time.

    Adding coin a turns counts[n] into counts[n] + counts[n - a] in
    increasing n, which along each residue class mod a is a running sum.
    """
    if limit < 0:
        raise InvalidInputError(f"table limit must be nonnegative, got {limit}")
    if cap is not None and cap < 1:
        raise InvalidInputError(f"saturation cap must be positive, got {cap}")
    if cap is not None:
        checked(cap, "saturation cap")
    max_cells = Config.MAX_TABLE_CELLS if max_cells is None else max_cells
    if limit + 1 > max_cells:
        logger.warning("Refusing a %d-cell table (ceiling %d)", limit + 1, max_cells)
        raise ResourceLimitError(
            f"table of {limit + 1} cells exceeds the ceiling of {max_cells} cells")

    logger.debug("Building %s table for A={%s} up to %d",
                 f"cap-{cap}" if cap else "exact", denoms, limit)
    counts = np.zeros(limit + 1, dtype=np.int64)
    counts[0] = 1
    for coin in denoms:
        if coin > limit:
            continue
        rows = -(-(limit + 1) // coin)
        padded = np.zeros(rows * coin, dtype=np.int64)
        padded[:limit + 1] = counts
        grid = padded.reshape(rows, coin)
        if cap is None:
            summed = np.cumsum(grid, axis=0)
            # A wrapped running sum drops below the nonnegative term just added.
            if np.any(summed < grid):
                raise FrobOverflowError(
                    f"representation counts for A={{{denoms}}} exceed the signed 64-bit range "
                    f"below n={limit}")
        else:
            summed = _saturating_cumsum(grid, cap)
        counts = summed.reshape(-1)[:limit + 1].copy()

    counts.flags.writeable = False
    return DenumerantTable(denoms=denoms, limit=limit, counts=counts, cap=cap)


def count(denoms: DenominationSet, n: int, method: Method | str = Method.AUTO,
          max_cells: Optional[int] = None) -> CountValue:
    """p_A(n) through the selected backend; negative n has no representations."""
    backend = resolve_method(denoms, method)
    if n < 0:
        return CountValue(0)
    if backend is Method.POPOVICIU:
        a, b = denoms.pair
        return popoviciu_count(a, b, n)
    if backend is Method.DP:
        return dp_table(denoms, n, max_cells=max_cells).count(n)
    # frob.oracle imports CountValue from this module.
    from frob.oracle import oracle_count
    return oracle_count(denoms, n)


def q_count(denoms: DenominationSet, n: int, method: Method | str = Method.AUTO,
            max_cells: Optional[int] = None) -> CountValue:
    """Representations of n using every coin at least once: p_A(n - sum(A))."""
    return count(denoms, checked(n - denoms.total, "n - sum(A)"), method, max_cells=max_cells)


