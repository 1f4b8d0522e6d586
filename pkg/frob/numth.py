"""
Integer primitives: the denomination set type, gcd, modular inverses and
exact fractional parts.

All public results are range-checked against signed 64-bit integers.
Intermediate products may use up to 128 bits before being checked back.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, NamedTuple

from frob.errors import FrobOverflowError, InvalidInputError, NoInverseError

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1
INT128_MIN = -(2**127)
INT128_MAX = 2**127 - 1


def checked(value: int, what: str = "result") -> int:
    """Return value unchanged if it fits in int64, otherwise raise."""
    if not INT64_MIN <= value <= INT64_MAX:
        raise FrobOverflowError(f"{what} {value} exceeds the signed 64-bit range")
    return value


def checked_wide(value: int, what: str = "intermediate") -> int:
    """Same as checked() for 128-bit intermediates."""
    if not INT128_MIN <= value <= INT128_MAX:
        raise FrobOverflowError(f"{what} exceeds the signed 128-bit range")
    return value


def gcd_all(values: Iterable[int]) -> int:
    """Greatest common divisor of a nonempty list of positive integers."""
    values = list(values)
    if not values:
        raise InvalidInputError("gcd of an empty list is undefined")
    for v in values:
        if v < 1:
            raise InvalidInputError(f"gcd inputs must be positive, got {v}")
    return reduce(math.gcd, values)


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (x, y, g) with a*x + b*y = g = gcd(a, b)."""
    prev_x, x = 1, 0
    prev_y, y = 0, 1
    while b != 0:
        q = a // b
        a, b = b, a % b
        prev_x, x = x, prev_x - q * x
        prev_y, y = y, prev_y - q * y
    return prev_x, prev_y, a


def mod_inverse(x: int, m: int) -> int:
    """
    Inverse of x modulo m, normalized to [1, m-1].

    Raises NoInverseError when gcd(x, m) != 1.
    """
    if m < 2:
        raise InvalidInputError(f"modulus must be at least 2, got {m}")
    if x < 1:
        raise InvalidInputError(f"value must be positive, got {x}")
    inv, _, g = extended_gcd(x, m)
    if g != 1:
        raise NoInverseError(f"{x} has no inverse modulo {m} (gcd is {g})")
    return inv % m


class FracPart(NamedTuple):
    """Exact fractional part {numer/denom} stored as residue/denom."""
    residue: int
    denom: int

    def as_fraction(self) -> Fraction:
        return Fraction(self.residue, self.denom)

    def __float__(self) -> float:
        return self.residue / self.denom


def frac_times(numer: int, denom: int) -> FracPart:
    """{numer/denom} = (numer mod denom)/denom, residue in [0, denom)."""
    if denom < 1:
        raise InvalidInputError(f"denominator must be positive, got {denom}")
    return FracPart(numer % denom, denom)


@dataclass(frozen=True)
class DenominationSet:
    """
    A validated coin set: d >= 2 distinct positive integers with gcd 1,
    stored in ascending order.
    """
    denoms: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.denoms)
        if len(values) < 2:
            raise InvalidInputError(
                f"need at least two denominations, got {len(values)}")
        for v in values:
            if v < 1:
                raise InvalidInputError(f"denominations must be positive, got {v}")
            checked(v, "denomination")
        if len(set(values)) != len(values):
            dupes = sorted({v for v in values if values.count(v) > 1})
            raise InvalidInputError(f"duplicate denominations: {dupes}")
        g = gcd_all(values)
        if g != 1:
            raise InvalidInputError(f"denominations must have gcd 1, got gcd {g}")
        object.__setattr__(self, 'denoms', tuple(sorted(values)))

    @classmethod
    def of(cls, *values: int) -> DenominationSet:
        return cls(tuple(values))

    @classmethod
    def parse(cls, text: str) -> DenominationSet:
        """Parse a comma-separated list such as '5,3'."""
        parts = [p.strip() for p in text.split(',') if p.strip()]
        try:
            values = tuple(int(p) for p in parts)
        except ValueError:
            raise InvalidInputError(f"denominations must be integers, got {text!r}")
        return cls(values)

    @property
    def d(self) -> int:
        return len(self.denoms)

    @property
    def smallest(self) -> int:
        return self.denoms[0]

    @property
    def largest(self) -> int:
        return self.denoms[-1]

    @property
    def total(self) -> int:
        return checked(sum(self.denoms), "sum of denominations")

    @property
    def pair(self) -> tuple[int, int]:
        """(a, b) for a two-coin set."""
        if self.d != 2:
            raise InvalidInputError(f"expected two denominations, got {self.d}")
        return self.denoms[0], self.denoms[1]

    def __iter__(self):
        return iter(self.denoms)

    def __len__(self):
        return len(self.denoms)

    def __str__(self):
        return ','.join(str(v) for v in self.denoms)


def require_coprime_pair(a: int, b: int) -> None:
    """Validate the (a, b) arguments of the two-coin closed forms."""
    if a < 1 or b < 1:
        raise InvalidInputError(f"a and b must be positive, got ({a}, {b})")
    checked(a, "a")
    checked(b, "b")
    g = math.gcd(a, b)
    if g != 1:
        raise InvalidInputError(f"a and b must be coprime, got gcd({a}, {b}) = {g}")
