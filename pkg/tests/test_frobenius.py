import math

import pytest

from frob.denumerant import dp_table
from frob.errors import InvalidInputError, NotFoundBelowHorizonError, ResourceLimitError
from frob.frobenius import (
    count_k_rep,
    count_nonrep,
    g_k_closed,
    g_k_search,
    gaps,
    is_representable,
    k_rep_interval,
    kfrobenius_report,
    list_k_rep,
    smallest_k_rep,
)
from frob.numth import DenominationSet
from frob.oracle import oracle_count


def _coprime_pairs(limit):
    return [(a, b) for b in range(2, limit + 1) for a in range(1, b) if math.gcd(a, b) == 1]


def test_g_k_closed_examples():
    assert g_k_closed(3, 5, 0) == 7
    assert g_k_closed(3, 5, 1) == 22
    assert g_k_closed(1, 2, 0) == -1
    assert g_k_closed(3, 5, 4) == 67


def test_g_k_closed_rejects_bad_input():
    with pytest.raises(InvalidInputError):
        g_k_closed(4, 6, 0)
    with pytest.raises(InvalidInputError):
        g_k_closed(3, 5, -1)


def test_g_k_search_examples(pair_3_5, triples):
    assert g_k_search(pair_3_5, 4) == 67
    for denoms, expected in triples.items():
        assert g_k_search(DenominationSet(denoms), 0) == expected


def test_g_k_search_doubles_a_short_horizon():
    assert g_k_search(DenominationSet.of(6, 10, 15), 0, horizon=7) == 29


def test_g_k_search_respects_the_table_ceiling(pair_3_5):
    with pytest.raises(ResourceLimitError):
        g_k_search(pair_3_5, 0, max_cells=10)


def test_g_k_search_with_a_unit_coin():
    assert g_k_search(DenominationSet.of(1, 2), 0) == -1
    assert g_k_search(DenominationSet.of(1, 2), 1) == 1


def test_smallest_k_rep_examples(pair_3_5):
    assert smallest_k_rep(pair_3_5, 2) == 15
    assert smallest_k_rep(pair_3_5, 1) == 3
    assert smallest_k_rep(pair_3_5, 5) == 60
    with pytest.raises(InvalidInputError):
        smallest_k_rep(pair_3_5, 0)


def test_smallest_k_rep_three_coins_matches_oracle():
    denoms = DenominationSet.of(2, 3, 7)
    for k in range(1, 6):
        expected = next(n for n in range(1, 500) if oracle_count(denoms, n) == k)
        assert smallest_k_rep(denoms, k) == expected


def test_smallest_k_rep_reports_unattained_counts():
    # p_{1,2,3}(n) runs 1, 1, 2, 3, 4, 5, 7, ... and skips 6.
    denoms = DenominationSet.of(1, 2, 3)
    with pytest.raises(NotFoundBelowHorizonError):
        smallest_k_rep(denoms, 6)
    assert smallest_k_rep(denoms, 7) == 6
    assert list_k_rep(denoms, 6) == []


def test_count_k_rep_examples():
    assert count_k_rep(3, 5, 1) == 14
    assert count_k_rep(3, 5, 2) == 15
    assert count_k_rep(2, 3, 1) == 5
    with pytest.raises(InvalidInputError):
        count_k_rep(3, 5, 0)


def test_count_nonrep_examples():
    assert count_nonrep(3, 5) == 4
    assert count_nonrep(2, 3) == 1
    assert count_nonrep(1, 9) == 0


def test_k_rep_interval_examples():
    assert k_rep_interval(3, 5, 2) == (15, 37)
    assert k_rep_interval(3, 5, 3) == (30, 52)
    assert k_rep_interval(2, 3, 2) == (6, 13)
    with pytest.raises(InvalidInputError):
        k_rep_interval(3, 5, 1)


def test_list_k_rep_examples(pair_3_5):
    assert list_k_rep(pair_3_5, 0) == [1, 2, 4, 7]
    twice = list_k_rep(pair_3_5, 2)
    assert len(twice) == 15
    assert (twice[0], twice[-1]) == (15, 37)
    assert list_k_rep(DenominationSet.of(2, 3, 7), 0) == [1]
    assert list_k_rep(DenominationSet.of(1, 4), 0) == []


def test_uniquely_representable_for_two_and_three():
    assert list_k_rep(DenominationSet.of(2, 3), 1) == [2, 3, 4, 5, 7]


def test_gaps_and_membership(pair_3_5):
    assert gaps(pair_3_5) == [1, 2, 4, 7]
    assert not is_representable(pair_3_5, 7)
    assert is_representable(pair_3_5, 8)
    assert is_representable(pair_3_5, 0)
    assert not is_representable(pair_3_5, -1)
    assert is_representable(pair_3_5, 10**12)
    sixes = DenominationSet.of(6, 10, 15)
    assert not is_representable(sixes, 29)
    assert is_representable(sixes, 30)


def test_report_for_two_coins(pair_3_5):
    report = kfrobenius_report(pair_3_5, 2)
    assert (report.g_k, report.smallest_k_rep, report.count_k_rep, report.interval) == \
        (37, 15, 15, (15, 37))
    report = kfrobenius_report(pair_3_5, 1)
    assert (report.g_k, report.smallest_k_rep, report.count_k_rep, report.interval) == \
        (22, 3, 14, (3, 22))
    report = kfrobenius_report(pair_3_5, 0)
    assert (report.g_k, report.smallest_k_rep, report.count_k_rep, report.interval) == \
        (7, None, 4, (1, 7))
    assert report.as_dict()['denoms'] == [3, 5]


def test_report_for_three_coins():
    report = kfrobenius_report(DenominationSet.of(2, 3, 7), 0)
    assert (report.g_k, report.smallest_k_rep, report.count_k_rep, report.interval) == \
        (1, None, 1, (1, 1))
    skipped = kfrobenius_report(DenominationSet.of(1, 2, 3), 6)
    assert skipped.g_k == 5
    assert skipped.smallest_k_rep is None
    assert skipped.count_k_rep == 0
    assert skipped.interval is None


def test_report_with_no_gaps():
    report = kfrobenius_report(DenominationSet.of(1, 2), 0)
    assert report.g_k == -1
    assert report.count_k_rep == 0
    assert report.interval is None


def test_closed_forms_agree_with_search_and_enumeration():
    for a, b in _coprime_pairs(20):
        denoms = DenominationSet.of(a, b)
        for k in range(11):
            assert g_k_search(denoms, k) == g_k_closed(a, b, k) == (k + 1) * a * b - a - b
            members = list_k_rep(denoms, k)
            if k == 0:
                assert len(members) == count_nonrep(a, b)
                if members:
                    assert members[-1] == g_k_closed(a, b, 0)
                continue
            assert len(members) == count_k_rep(a, b, k), (a, b, k)
            assert members[0] == smallest_k_rep(denoms, k)
            if k >= 2:
                assert (members[0], members[-1]) == k_rep_interval(a, b, k)
            else:
                assert (members[0], members[-1]) == (min(a, b), g_k_closed(a, b, 1))


def test_smallest_k_rep_for_pairs_matches_brute_force_scan():
    for a, b in _coprime_pairs(20):
        denoms = DenominationSet.of(a, b)
        n, k = 1, 2
        while k <= 8:
            found = oracle_count(denoms, n)
            if found >= k:
                assert found == k, (a, b, n)
                assert n == a * b * (k - 1) == smallest_k_rep(denoms, k), (a, b, k)
                k += 1
            n += 1


def test_definition_of_g_k_for_general_sets():
    sets = [(2, 3, 7), (6, 10, 15), (3, 5, 7), (4, 9, 11, 14), (5, 8)]
    for values in sets:
        denoms = DenominationSet(values)
        for k in range(4):
            g = g_k_search(denoms, k)
            table = dp_table(denoms, max(g, 0) + 2 * denoms.largest)
            if g >= 0:
                assert table[g] <= k
            assert all(table[n] > k for n in range(g + 1, g + 2 * denoms.largest + 1))


def test_termination_window_holds_far_beyond():
    for values in [(3, 5, 7), (6, 10, 15), (4, 9, 11, 14)]:
        denoms = DenominationSet(values)
        for k in range(4):
            g = g_k_search(denoms, k)
            window_end = g + denoms.smallest
            table = dp_table(denoms, 2 * window_end + 2, cap=k + 1)
            assert all(table[n] > k for n in range(g + 1, 2 * window_end + 3))
