import itertools

import pytest

from pinnacle.admissible import count_admissible, enumerate_admissible
from pinnacle.bijections import (
    interleaved_from_subset, lattice_path_from_subset, phi, psi, right_canonical,
)
from pinnacle.errors import DomainError
from pinnacle.perm import pinnacle_set


def subsets(n):
    return itertools.combinations(range(2, n + 1), (n - 1) // 2)


def test_interleaved_examples():
    assert interleaved_from_subset({2, 3, 7, 9}, 9) == (1, 2, 4, 3, 5, 7, 6, 9, 8)
    assert interleaved_from_subset({2}, 3) == (1, 2, 3)
    assert interleaved_from_subset({3}, 3) == (1, 3, 2)
    with pytest.raises(DomainError):
        interleaved_from_subset({2, 3}, 3)
    with pytest.raises(DomainError):
        interleaved_from_subset({1}, 3)


def test_right_canonical_examples():
    assert right_canonical({4, 7, 9}, 9) == (1, 2, 4, 3, 5, 7, 6, 9, 8)
    assert right_canonical((), 5) == (1, 2, 3, 4, 5)
    assert pinnacle_set(right_canonical({3}, 4)) == (3,)
    assert right_canonical((), 1) == (1,)
    assert right_canonical((), 2) == (1, 2)
    with pytest.raises(DomainError):
        right_canonical({3, 4}, 5)


def test_psi_examples():
    assert psi({2, 3, 7, 9}, 9) == (4, 7, 9)
    assert psi({2}, 3) == ()
    assert psi({3}, 3) == (3,)


def test_lattice_path():
    assert str(lattice_path_from_subset({2, 3, 7, 9}, 9)) == "DDUUUDUD"
    assert str(lattice_path_from_subset((), 4)) == "UUU"
    assert str(lattice_path_from_subset({2, 3}, 4)) == "DDU"
    assert lattice_path_from_subset({2, 3, 7, 9}, 9).heights == (-1, -2, -1, 0, 1, 0, 1, 0)


def test_phi_examples():
    assert phi({2, 3, 7, 9}, 9) == (4, 7, 9)
    assert phi({3}, 3) == (3,)
    assert phi({2}, 3) == ()


def test_start_height_reading_disagrees():
    # judging steps by their starting height puts index 2 (a down step from
    # the axis) into the image, contradicting the worked example
    assert phi({2, 3, 7, 9}, 9, convention="start") != psi({2, 3, 7, 9}, 9)


@pytest.mark.parametrize("n", range(2, 13))
def test_phi_equals_psi(n):
    for a in subsets(n):
        assert phi(a, n) == psi(a, n)


@pytest.mark.parametrize("n", range(1, 13))
def test_psi_is_bijection_onto_admissible(n):
    image = [psi(a, n) for a in subsets(n)]
    assert len(image) == len(set(image)) == count_admissible(n)
    assert sorted(image) == enumerate_admissible(n)


@pytest.mark.parametrize("n", range(1, 13))
def test_right_canonical_realizes_set(n):
    for s in enumerate_admissible(n):
        assert pinnacle_set(right_canonical(s, n)) == s


@pytest.mark.parametrize("n", range(1, 11))
def test_right_canonical_equals_interleaved(n):
    canonical = {right_canonical(s, n) for s in enumerate_admissible(n)}
    interleaved = {interleaved_from_subset(a, n) for a in subsets(n)}
    assert canonical == interleaved
