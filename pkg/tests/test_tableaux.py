"""Shapes, tableaux and dominance, against the hook-length formula."""

from math import comb, factorial

import pytest

from zrelalg.tableaux import (all_bishapes, all_shapes, bishape_dominates,
                              bishape_strictly_dominates, canonical_tableau,
                              check_shape, dominates, standard_bitableaux,
                              standard_tableaux, strictly_dominates,
                              tableau_entries)


def _hook_count(shape):
    """Independent oracle: number of standard tableaux by hook lengths."""
    n = sum(shape)
    if n == 0:
        return 1
    cols = [sum(1 for p in shape if p > j) for j in range(shape[0])]
    prod = 1
    for i, width in enumerate(shape):
        for j in range(width):
            prod *= (width - j) + (cols[j] - i) - 1
    return factorial(n) // prod


@pytest.mark.parametrize("n", range(6))
def test_tableaux_counts_match_hook_formula(n):
    for shape in all_shapes(n):
        assert len(standard_tableaux(shape)) == _hook_count(shape)
    assert sum(len(standard_tableaux(s)) ** 2 for s in all_shapes(n)) \
        == factorial(n)


@pytest.mark.parametrize("n", range(5))
def test_bitableaux_counts(n):
    for l1, l2 in all_bishapes(n):
        expected = (comb(n, sum(l1)) * _hook_count(l1) * _hook_count(l2))
        assert len(standard_bitableaux((l1, l2))) == expected


def test_all_shapes_partition_counts():
    # partition numbers p(0..7) = 1 1 2 3 5 7 11 15
    assert [len(all_shapes(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    for shape in all_shapes(6):
        check_shape(shape)


def test_standard_tableaux_are_standard():
    for tab in standard_tableaux((3, 2)):
        for row in tab:
            assert list(row) == sorted(row)
        for r in range(1, len(tab)):
            for c in range(len(tab[r])):
                assert tab[r][c] > tab[r - 1][c]
        assert sorted(tableau_entries(tab)) == [1, 2, 3, 4, 5]


def test_canonical_tableau():
    assert canonical_tableau((2, 1)) == ((1, 2), (3,))
    assert canonical_tableau((2,), [5, 7]) == ((5, 7),)


def test_dominance_hand_facts():
    assert dominates((3,), (2, 1))
    assert dominates((2, 1), (1, 1, 1))
    assert not dominates((1, 1, 1), (2, 1))
    assert not strictly_dominates((2, 1), (2, 1))
    assert not dominates((2, 2), (3, 1))
    with pytest.raises(ValueError):
        dominates((2,), (3,))


def test_dominance_is_a_partial_order():
    shapes = all_shapes(6)
    for a in shapes:
        assert dominates(a, a)
        for b in shapes:
            if strictly_dominates(a, b):
                assert not dominates(b, a)
            for c in shapes:
                if dominates(a, b) and dominates(b, c):
                    assert dominates(a, c)


def test_bishape_dominance():
    # larger first component dominates outright
    assert bishape_strictly_dominates(((1,), ()), ((), (1,)))
    assert bishape_strictly_dominates(((2,), ()), ((1, 1), ()))
    assert not bishape_dominates(((), (2,)), ((1,), (1,)))
    bis = all_bishapes(3)
    for a in bis:
        assert bishape_dominates(a, a)
        for b in bis:
            if bishape_strictly_dominates(a, b):
                assert not bishape_dominates(b, a)


def test_check_shape_rejects_bad_input():
    with pytest.raises(ValueError):
        check_shape((1, 2))
    with pytest.raises(ValueError):
        check_shape((2, 0))
