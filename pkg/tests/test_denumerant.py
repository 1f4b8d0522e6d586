import math
from fractions import Fraction

import numpy as np
import pytest

from frob.denumerant import (
    CountValue,
    Method,
    count,
    dp_table,
    popoviciu_count,
    q_count,
    resolve_method,
)
from frob.errors import (
    FrobOverflowError,
    InvalidInputError,
    MethodMismatchError,
    ResourceLimitError,
)
from frob.numth import INT64_MAX, DenominationSet
from frob.oracle import oracle_count


def _coprime_pairs(limit):
    return [(a, b) for b in range(2, limit + 1) for a in range(1, b) if math.gcd(a, b) == 1]


def test_popoviciu_examples():
    assert popoviciu_count(3, 5, 10) == 1
    assert popoviciu_count(3, 5, 7) == 0
    assert popoviciu_count(3, 5, 0) == 1
    assert popoviciu_count(3, 5, 22) == 1
    assert popoviciu_count(3, 5, 37) == 2
    assert popoviciu_count(3, 5, -4) == 0


def test_popoviciu_rejects_non_coprime():
    with pytest.raises(InvalidInputError):
        popoviciu_count(4, 6, 12)


def test_popoviciu_wide_intermediates():
    a = 2**40
    assert popoviciu_count(a, a + 1, 5) == 0


def test_popoviciu_overflow():
    with pytest.raises(FrobOverflowError):
        popoviciu_count(1, 1, INT64_MAX)
    with pytest.raises(FrobOverflowError):
        popoviciu_count(3, 5, INT64_MAX + 1)


def test_dp_table_examples(pair_3_5):
    assert dp_table(pair_3_5, 15)[15] == 2
    assert dp_table(DenominationSet.of(2, 3, 7), 10)[10] == 3
    assert list(dp_table(pair_3_5, 0).counts) == [1]


def test_dp_table_is_read_only(pair_3_5):
    table = dp_table(pair_3_5, 10)
    with pytest.raises(ValueError):
        table.counts[3] = 7


def test_dp_table_rows_and_bounds(pair_3_5):
    table = dp_table(pair_3_5, 5)
    assert list(table.rows()) == [(0, 1), (1, 0), (2, 0), (3, 1), (4, 0), (5, 1)]
    assert table[-3] == 0
    with pytest.raises(IndexError):
        table[6]


def test_saturated_table_is_exact_table_capped():
    denoms = DenominationSet.of(2, 3, 5, 7)
    exact = dp_table(denoms, 400)
    for cap in (1, 2, 5, 30):
        capped = dp_table(denoms, 400, cap=cap)
        assert capped.saturated
        assert np.array_equal(capped.counts, np.minimum(exact.counts, cap))


def test_dp_table_monotone_under_adding_a_coin():
    denoms = DenominationSet.of(4, 9, 11)
    for cap in (None, 3):
        table = dp_table(denoms, 300, cap=cap)
        for coin in denoms:
            assert np.all(table.counts[coin:] >= table.counts[:-coin])


def test_dp_table_memory_ceiling(pair_3_5):
    with pytest.raises(ResourceLimitError):
        dp_table(pair_3_5, 10**6, max_cells=1000)


def test_dp_table_overflow_in_exact_mode_only():
    many = DenominationSet(tuple(range(1, 41)))
    with pytest.raises(FrobOverflowError):
        dp_table(many, 5000)
    capped = dp_table(many, 5000, cap=5)
    assert capped[5000] == 5


def test_dp_table_overflow_on_the_last_coin():
    # p over {1..12} stays inside int64 up to 1470; adding 13 pushes p(1470) past it.
    fits = dp_table(DenominationSet(tuple(range(1, 13))), 1470)
    assert fits[1470] > 0
    with pytest.raises(FrobOverflowError):
        dp_table(DenominationSet(tuple(range(1, 14))), 1470)


def test_large_cap_saturates_instead_of_wrapping():
    denoms = DenominationSet(tuple(range(1, 14)))
    capped = dp_table(denoms, 1470, cap=2**62)
    assert capped[1470] == 2**62
    assert capped.counts.min() >= 0
    exact = dp_table(DenominationSet(tuple(range(1, 13))), 1470)
    near_limit = dp_table(DenominationSet(tuple(range(1, 13))), 1470, cap=INT64_MAX)
    assert np.array_equal(near_limit.counts, exact.counts)


def test_dp_table_rejects_caps_outside_int64(pair_3_5):
    with pytest.raises(FrobOverflowError):
        dp_table(pair_3_5, 10, cap=INT64_MAX + 1)


def test_count_examples(pair_3_5):
    for method in Method:
        assert count(pair_3_5, 37, method) == 2
        assert count(pair_3_5, 0, method) == 1
    assert count(DenominationSet.of(6, 10, 15), 30) == 3
    assert count(DenominationSet.of(6, 10, 15), 30, 'oracle') == 3


def test_count_negative_is_zero(pair_3_5):
    assert count(pair_3_5, -1) == 0


def test_method_resolution(pair_3_5):
    triple = DenominationSet.of(2, 3, 7)
    assert resolve_method(pair_3_5) is Method.POPOVICIU
    assert resolve_method(triple) is Method.DP
    assert resolve_method(triple, 'oracle') is Method.ORACLE
    with pytest.raises(MethodMismatchError):
        count(triple, 10, Method.POPOVICIU)


def test_q_count_examples(pair_3_5):
    assert q_count(pair_3_5, 8) == 1
    assert q_count(pair_3_5, 30) == 1
    assert q_count(pair_3_5, 7) == 0


def test_q_count_is_shifted_p():
    denoms = DenominationSet.of(2, 5, 7)
    for n in range(denoms.total, 120):
        assert q_count(denoms, n) == count(denoms, n - denoms.total)


def test_count_value_contract():
    assert CountValue(3) + 4 == 7
    assert isinstance(CountValue(3) + 4, CountValue)
    with pytest.raises(InvalidInputError):
        CountValue(-1)
    with pytest.raises(FrobOverflowError):
        CountValue(INT64_MAX) + 1


def test_backends_agree_on_pairs_up_to_25():
    for a, b in _coprime_pairs(25):
        denoms = DenominationSet.of(a, b)
        top = 3 * a * b
        table = dp_table(denoms, top)
        for n in range(top + 1):
            closed = popoviciu_count(a, b, n)
            assert closed == table[n] == oracle_count(denoms, n), (a, b, n)


def test_periodicity_reflection_and_bounded_error():
    for a, b in _coprime_pairs(25):
        ab = a * b
        table = dp_table(DenominationSet.of(a, b), 4 * ab)
        for n in range(3 * ab + 1):
            assert table[n + ab] == table[n] + 1, (a, b, n)
            error = table[n] - Fraction(n, ab)
            assert -1 < error <= 1, (a, b, n)
        for n in range(1, ab):
            if n % a and n % b:
                assert table[n] + table[ab - n] == 1, (a, b, n)


def test_unit_coin_gives_floor_formula():
    for a in range(2, 13):
        denoms = DenominationSet.of(a, 1)
        table = dp_table(denoms, 200)
        for n in range(201):
            assert table[n] == n // a + 1
            assert popoviciu_count(a, 1, n) == n // a + 1
