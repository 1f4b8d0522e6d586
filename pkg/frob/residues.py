"""
Roots-of-unity sums behind Popoviciu's formula, checked numerically.

Residues of 1 / ((1 - z^a)(1 - z^b) z^(n+1)) at the nontrivial a-th and b-th
roots of unity produce sums of the form

    sum over lambda^a = 1 != lambda of 1 / ((1 - lambda^c) lambda^n)

which collapse to fractional parts. Everything here is double precision;
results are compared against exact values within a tolerance.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from frob.errors import InvalidInputError
from frob.numth import frac_times, mod_inverse, require_coprime_pair


@dataclass(frozen=True)
class UnityRootSum:
    modulus: int
    shift: int
    value: complex

    def is_real(self, tol: float) -> bool:
        return abs(self.value.imag) <= tol


class IdentityCheck(NamedTuple):
    holds: bool
    residual: float


def _phases(modulus: int, exponents: np.ndarray) -> np.ndarray:
    # Reduce j*e mod modulus in integers before exponentiating.
    return np.exp(2j * np.pi * (exponents % modulus) / modulus)


def root_sum(modulus: int, coin: int, n: int) -> complex:
    """
    sum over nontrivial modulus-th roots lambda of 1 / ((1 - lambda^coin) lambda^n).

    Every root is computed directly from its exponent. A modulus of 1 has no
    nontrivial roots and gives 0.
    """
    if modulus < 1:
        raise InvalidInputError(f"modulus must be positive, got {modulus}")
    if modulus == 1:
        return 0j
    j = np.arange(1, modulus, dtype=np.int64)
    lam_coin = _phases(modulus, j * (coin % modulus))
    lam_n = _phases(modulus, j * (n % modulus))
    return complex(np.sum(1.0 / ((1.0 - lam_coin) * lam_n)))


def unity_sum(a: int, n: int) -> UnityRootSum:
    """(1/a) sum over nontrivial a-th roots lambda of 1 / ((1 - lambda) lambda^n)."""
    if a < 2:
        raise InvalidInputError(f"a must be at least 2, got {a}")
    return UnityRootSum(modulus=a, shift=n, value=root_sum(a, 1, n) / a)


def frac_identity_value(a: int, n: int) -> float:
    """-{n/a} + 1/2 - 1/(2a)."""
    return float(-frac_times(n, a).as_fraction() + Fraction(1, 2) - Fraction(1, 2 * a))


def verify_exercise4(a: int, n: int, tol: float) -> IdentityCheck:
    """The normalized root sum equals -{n/a} + 1/2 - 1/(2a)."""
    total = unity_sum(a, n)
    residual = abs(total.value - frac_identity_value(a, n))
    return IdentityCheck(residual <= tol, residual)


def verify_exercise5(a: int, b: int, n: int, tol: float) -> IdentityCheck:
    """
    Substituting lambda -> lambda^b permutes the nontrivial a-th roots, so the
    sum with (1 - lambda^b) in the denominator equals the sum with (1 - lambda)
    and exponent b^-1 n.
    """
    if a < 2:
        raise InvalidInputError(f"a must be at least 2, got {a}")
    require_coprime_pair(a, b)
    inverse = mod_inverse(b % a, a)
    lhs = root_sum(a, b, n)
    rhs = root_sum(a, 1, inverse * n)
    residual = abs(lhs - rhs)
    return IdentityCheck(residual <= tol, residual)


def residue_count(a: int, b: int, n: int) -> float:
    """
    p_{a,b}(n) reassembled from the residues at every pole of the generating
    function other than 0:

        n/ab + (1/a + 1/b)/2 + (1/a) S_a + (1/b) S_b

    with S_a = sum over nontrivial a-th roots of 1 / ((1 - lambda^b) lambda^n),
    and S_b symmetric.
    """
    require_coprime_pair(a, b)
    value = (n / (a * b) + (1 / a + 1 / b) / 2
             + root_sum(a, b, n) / a + root_sum(b, a, n) / b)
    return complex(value).real


def tolerance_for(a: int, b: int = 0) -> float:
    """Cancellation grows with the modulus; so does the tolerance."""
    largest = max(a, b)
    if largest <= 20:
        return 1e-9
    if largest <= 100:
        return 1e-6
    return 1e-4
