"""
Brute-force ground truth: enumerate every multiplicity vector explicitly.

Deliberately slow and shares nothing with the dynamic program.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator, Optional

from config import Config
from frob.denumerant import CountValue
from frob.errors import InvalidInputError, ResourceLimitError
from frob.numth import DenominationSet

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Representation:
    """Multiplicities (m_1, ..., m_d) aligned with the denomination order."""
    multiplicities: tuple[int, ...]

    def value(self, denoms: DenominationSet) -> int:
        return sum(m * a for m, a in zip(self.multiplicities, denoms))

    def __str__(self):
        return '(' + ','.join(str(m) for m in self.multiplicities) + ')'


def _walk(coins: tuple[int, ...], remaining: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    coin = coins[0]
    if len(coins) == 1:
        if remaining % coin == 0:
            yield prefix + (remaining // coin,)
        return
    for m in range(remaining // coin + 1):
        yield from _walk(coins[1:], remaining - m * coin, prefix + (m,))


def _tally(coins: tuple[int, ...], remaining: int) -> int:
    coin = coins[0]
    if len(coins) == 1:
        return 1 if remaining % coin == 0 else 0
    total = 0
    for m in range(remaining // coin + 1):
        total += _tally(coins[1:], remaining - m * coin)
    return total


def enumerate_reps(denoms: DenominationSet, n: int,
                   max_out: Optional[int] = None) -> list[Representation]:
    """
    All representations of n, lexicographically sorted.

    The first coordinate is the outermost loop and every loop ascends, so the
    walk already produces lexicographic order.
    """
    if n < 0:
        raise InvalidInputError(f"n must be nonnegative, got {n}")
    max_out = Config.MAX_REPS_OUT if max_out is None else max_out
    reps = []
    for vector in _walk(denoms.denoms, n, ()):
        if len(reps) >= max_out:
            logger.warning("Representation listing for n=%d stopped at %d entries", n, max_out)
            raise ResourceLimitError(
                f"n={n} has more than {max_out} representations; raise --max-reps-out")
        reps.append(Representation(vector))
    return reps


def oracle_count(denoms: DenominationSet, n: int) -> CountValue:
    """Number of representations of n, counted without building the list."""
    if n < 0:
        raise InvalidInputError(f"n must be nonnegative, got {n}")
    return CountValue(_tally(denoms.denoms, n))
