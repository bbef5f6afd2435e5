from math import factorial

import pytest

from pinnacle.admissible import enumerate_admissible
from pinnacle.errors import DomainError, SizeGuardError
from pinnacle.oracle import brute_orderings, ordering_table
from pinnacle.orderings import (
    count_orderings, count_orderings_composition, enumerate_orderings,
    is_admissible_ordering,
)


def sets_with_max(m):
    return [s for s in enumerate_admissible(m) if s and s[-1] == m]


def test_admissible_ordering_examples():
    assert is_admissible_ordering((3, 5, 7), (5, 3, 7))
    assert not is_admissible_ordering((3, 5, 7), (3, 7, 5))
    for l in range(3, 12):
        assert is_admissible_ordering((l,), (l,))
    with pytest.raises(DomainError):
        is_admissible_ordering((3, 5), (3, 3))


def test_counts_small():
    assert count_orderings((3, 5, 7)) == 4
    assert count_orderings_composition((3, 5, 7)) == 4
    assert count_orderings((6,)) == 1
    assert count_orderings((3, 5)) == 2
    assert count_orderings((3, 6)) == count_orderings_composition((3, 6)) == 2
    assert count_orderings(()) == 1
    # value from an exhaustive scan of S_9
    assert count_orderings((3, 5, 7, 9)) == count_orderings_composition((3, 5, 7, 9)) == 8


def test_enumerate_examples():
    assert enumerate_orderings((3, 5, 7)) == [(3, 5, 7), (5, 3, 7), (7, 3, 5), (7, 5, 3)]
    assert enumerate_orderings((4,)) == [(4,)]
    assert enumerate_orderings((3, 5)) == [(3, 5), (5, 3)]
    with pytest.raises(SizeGuardError):
        enumerate_orderings(tuple(range(3, 22, 2)))


@pytest.mark.parametrize("m", range(3, 10))
def test_against_brute_force(m):
    table = ordering_table(m)
    for s in sets_with_max(m):
        listed = enumerate_orderings(s)
        assert count_orderings(s) == len(listed) == len(table[s])
        assert set(listed) == table[s]


def test_brute_orderings_direct():
    assert brute_orderings((3, 5, 7)) == {(3, 5, 7), (5, 3, 7), (7, 3, 5), (7, 5, 3)}
    assert brute_orderings((3,)) == {(3,)}
    assert brute_orderings((4, 7, 9)) == set(enumerate_orderings((4, 7, 9)))


@pytest.mark.parametrize("m", range(3, 16))
def test_subset_and_composition_forms_agree(m):
    for s in sets_with_max(m):
        assert count_orderings(s) == count_orderings_composition(s)


@pytest.mark.parametrize("d", range(1, 7))
def test_without_feasibility_every_ordering_counts(d):
    for s in [tuple(range(3, 2 * d + 2, 2)), tuple(range(4, 4 + 3 * d, 3))]:
        assert count_orderings(s, use_delta=False) == factorial(d)


def test_reversal_symmetry():
    for s in enumerate_admissible(11):
        if 0 < len(s) <= 5:
            import itertools
            for sigma in itertools.permutations(s):
                assert is_admissible_ordering(s, sigma) == is_admissible_ordering(s, sigma[::-1])


def test_independent_of_ambient_n():
    # the listing only reads gaps below max S; scanning a larger group finds the same orders
    table = ordering_table(8)
    for s in sets_with_max(7):
        assert set(enumerate_orderings(s)) == table[s]
