import itertools
from math import factorial

import pytest

from pinnacle.admissible import enumerate_admissible
from pinnacle.counting import (
    count, count_by_ordering, count_closed, count_composition, count_dale, count_vale,
    count_vale_sets, enumerate_vale_sets, orderings_containing, tau_count_formula,
    vale_compositions,
)
from pinnacle.dales import (
    Dale, DaleSelection, GapComposition, GapProfile, dale_rank_set, master_dales,
)
from pinnacle.errors import DomainError, UnsupportedSizeError
from pinnacle.oracle import brute_vale_family
from pinnacle.perm import all_permutations, pinnacle_set

COUNTERS = [count_dale, count_composition, count_vale]


def test_gap_profile():
    prof = GapProfile((4, 7, 9), 9)
    assert prof.gaps == (3, 2, 1, 0)
    assert sum(prof.gaps) == 9 - 3
    with pytest.raises(DomainError):
        GapProfile((4, 10), 9)


def test_selection_parameters():
    sel = DaleSelection.from_labels(["1_l", "3_l", "3_r", "4_r"], 4)
    assert sel.b == 4
    assert sel.r == (1, 3, 3, 4)
    assert sel.bvec == (4, 3, 3, 1, 0)
    assert sel.composition() == (1, 0, 2, 1)
    comp = GapComposition(sel.composition())
    assert comp.r == sel.r and comp.bvec == sel.bvec and comp.o == 2


def test_dale_rank_set_examples():
    got = dale_rank_set((7, 6, 1, 2, 3, 5, 4))
    assert sorted(str(x) for x in got) == ["1_l", "1_r", "2_r", "3_r", "4_l", "4_r", "6_l"]
    assert DaleSelection(got, 6).composition() == (2, 1, 1, 2, 0, 1)
    assert dale_rank_set((1, 2)) == {Dale(1, "l"), Dale(1, "r")}
    assert dale_rank_set((1, 3, 2)) == {Dale(1, "l"), Dale(1, "r"), Dale(2, "l")}


@pytest.mark.parametrize("fn", COUNTERS + [count_closed])
@pytest.mark.parametrize("s, n, expected", [
    ((), 3, 4),
    ((3,), 4, 4),
    ((3, 5), 5, 4),
    ((4,), 4, 12),
    ((), 6, 32),
    ((), 10, 512),
    ((3,), 10, 256),
])
def test_small_counts(fn, s, n, expected):
    assert fn(s, n) == expected


def test_frozen_oracle_values():
    # both values from exhaustive scans of S_9
    for fn in COUNTERS:
        assert fn((4, 7, 9), 9) == 4128
        assert fn((3, 5, 7, 9), 9) == 16


def test_closed_form_rejects_large_sets():
    with pytest.raises(UnsupportedSizeError):
        count_closed((3, 5, 7), 7)


def test_inadmissible_rejected():
    for fn in COUNTERS + [count_closed]:
        with pytest.raises(DomainError):
            fn((3, 4), 6)
        with pytest.raises(DomainError):
            fn((3, 9), 8)
    with pytest.raises(DomainError):
        count((3,), 5, algo="nope")


@pytest.mark.parametrize("n", range(1, 9))
def test_four_way_agreement(n, distributions):
    truth = distributions[n]
    for s in enumerate_admissible(n):
        expected = truth.get(s, 0)
        for fn in COUNTERS:
            assert fn(s, n) == expected, (fn.__name__, s, n)
        if len(s) <= 2:
            assert count_closed(s, n) == expected


@pytest.mark.parametrize("n", range(1, 9))
def test_total_mass(n):
    assert sum(count_dale(s, n) for s in enumerate_admissible(n)) == factorial(n)


def test_full_dale_set_terms_vanish():
    # any B of size d+1 has b_1 = d+1, zeroing the i = 0 factor
    from pinnacle.counting import _PowCache, _gap_product
    from pinnacle.dales import selection_params
    prof = GapProfile((3, 5, 7), 9)
    for B in itertools.combinations(master_dales(3), 4):
        _, bvec = selection_params([x.rank for x in B], 3)
        assert _gap_product(3, bvec, _PowCache(prof.gaps)) == 0


def test_count_by_ordering_examples():
    assert count_by_ordering((3, 5), 5, (3, 5)) == 2
    assert count_by_ordering((3, 5), 5, (5, 3)) == 2
    assert count_by_ordering((3, 5, 7), 7, (3, 7, 5)) == 0
    with pytest.raises(DomainError):
        count_by_ordering((3, 5), 5, (3, 6))


def test_count_by_ordering_against_scan():
    n = 7
    seen = {}
    for p in all_permutations(n):
        order = tuple(p[i] for i in range(1, n - 1) if p[i - 1] < p[i] > p[i + 1])
        seen[order] = seen.get(order, 0) + 1
    for s in enumerate_admissible(n):
        for sigma in itertools.permutations(s):
            assert count_by_ordering(s, n, sigma) == seen.get(sigma, 0)


@pytest.mark.parametrize("n", range(1, 9))
def test_ordering_decomposition(n):
    for s in enumerate_admissible(n):
        total = sum(count_by_ordering(s, n, sigma) for sigma in itertools.permutations(s))
        assert total == count_dale(s, n)


@pytest.mark.parametrize("d", range(1, 7))
def test_tau_count_lemma(d):
    brute = orderings_containing(d)
    for b in range(d + 1):
        for B in itertools.combinations(master_dales(d), b):
            assert brute.get(frozenset(B), 0) == tau_count_formula(B, d)


def test_vale_compositions():
    assert list(vale_compositions(0)) == [()]
    assert sorted(vale_compositions(2)) == [(1, 1), (2, 0)]
    # prefix-constrained compositions are counted by Catalan numbers
    assert [len(list(vale_compositions(d))) for d in range(1, 7)] == [1, 2, 5, 14, 42, 132]


def test_vale_set_examples():
    assert enumerate_vale_sets((4,), 4).members == [(1, 2), (1, 3)]
    assert enumerate_vale_sets((3, 5), 5).members == [(1, 2, 4)]
    assert enumerate_vale_sets((), 6).members == [(1,)]
    assert count_vale_sets((4,), 4) == 2
    assert count_vale_sets((), 7) == 1
    assert count_vale_sets((3, 5), 5) == 1


@pytest.mark.parametrize("n", range(1, 11))
def test_vale_family_size(n):
    for s in enumerate_admissible(n):
        fam = enumerate_vale_sets(s, n)
        assert len(fam) == len(set(fam.members)) == count_vale_sets(s, n)
        assert all(t[0] == 1 and len(t) == len(s) + 1 for t in fam)


@pytest.mark.parametrize("n", range(1, 8))
def test_vale_family_against_scan(n):
    for s in enumerate_admissible(n):
        assert brute_vale_family(s, n) == set(enumerate_vale_sets(s, n).members)


def test_printed_binomial_variant_undercounts():
    assert count_vale((3,), 4, printed_binomial=True) == 2
    assert count_vale((4,), 4, printed_binomial=True) == 6
    for s, n in [((3, 5), 7), ((4, 7, 9), 9), ((5, 8), 11)]:
        assert count_vale(s, n, printed_binomial=True) << len(s) == count_vale(s, n)


def test_large_n_agreement():
    s = (3, 5, 7, 9, 11)
    ref = count_composition(s, 1000)
    assert len(str(ref)) > 290
    assert count_dale(s, 1000) == ref == count_vale(s, 1000)
    assert count_closed((5, 9), 300) == count_composition((5, 9), 300) == count_vale((5, 9), 300)
