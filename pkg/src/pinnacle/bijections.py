"""
Interleaved and right-canonical permutations, and the two maps from
``floor((n-1)/2)``-subsets of ``[2, n]`` onto admissible pinnacle sets.

``psi`` reads the pinnacle set of the interleaved permutation; ``phi`` reads
it off an up/down lattice path.  They are the same function.
"""

from __future__ import annotations

from dataclasses import dataclass

from .admissible import require_admissible
from .errors import DomainError
from .perm import ValueSet, as_value_set, pinnacle_set

__all__ = [
    "LatticePath", "interleaved_from_subset", "right_canonical", "psi",
    "lattice_path_from_subset", "phi",
]


def _check_subset(a, n: int, sized: bool) -> ValueSet:
    a = as_value_set(a)
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if a and (a[0] < 2 or a[-1] > n):
        raise DomainError(f"subset {a} is not inside [2, {n}]")
    k = (n - 1) // 2
    if sized and len(a) != k:
        raise DomainError(f"subset {a} must have floor((n-1)/2) = {k} elements")
    return a


def interleaved_from_subset(a, n: int) -> tuple[int, ...]:
    """Put ``a`` ascending in positions 2, 4, ..., and the rest ascending elsewhere.

    >>> interleaved_from_subset({2, 3, 7, 9}, 9)
    (1, 2, 4, 3, 5, 7, 6, 9, 8)
    """
    a = _check_subset(a, n, sized=True)
    rest = iter(v for v in range(1, n + 1) if v not in set(a))
    evens = iter(a)
    word = []
    for pos in range(1, n + 1):
        if pos % 2 == 0 and pos // 2 <= len(a):
            word.append(next(evens))
        else:
            word.append(next(rest))
    return tuple(word)


def right_canonical(s, n: int) -> tuple[int, ...]:
    """Fill positions right to left, pushing pinnacles as far right as they go.

    Non-pinnacles are placed in decreasing order until one drops below the
    largest unplaced pinnacle, which then goes in the next slot.  For even
    ``n`` the last two positions are both filled with non-pinnacles first.
    """
    s = require_admissible(s, n)
    if s and s[0] < 3:
        raise DomainError(f"pinnacles lie in [3, n], got {s}")
    pins = list(s)                      # ascending; pop() gives the largest
    rest = [v for v in range(1, n + 1) if v not in set(s)]
    word = [0] * n
    pos = n - 1
    forced = 2 if n % 2 == 0 else 1     # non-pinnacles placed before any pinnacle
    while pos >= 0:
        placed = 0
        # C1: at least one non-pinnacle, continuing while still above max pin
        while pos >= 0 and rest:
            v = rest.pop()
            word[pos] = v
            pos -= 1
            placed += 1
            if placed >= forced and (not pins or v < pins[-1]):
                break
        forced = 1
        # C2
        if pins and pos >= 0:
            word[pos] = pins.pop()
            pos -= 1
    return tuple(word)


def psi(a, n: int) -> ValueSet:
    return pinnacle_set(interleaved_from_subset(a, n))


@dataclass(frozen=True)
class LatticePath:
    """Up/down path whose steps are indexed ``2..n``."""

    steps: str

    @property
    def heights(self) -> tuple[int, ...]:
        """Heights after each step, starting from 0 before step 2."""
        h, out = 0, []
        for ch in self.steps:
            h += 1 if ch == "U" else -1
            out.append(h)
        return tuple(out)

    def __str__(self):
        return self.steps


def lattice_path_from_subset(a, n: int) -> LatticePath:
    """``D`` at the indices in ``a``, ``U`` elsewhere.

    >>> str(lattice_path_from_subset({2, 3, 7, 9}, 9))
    'DDUUUDUD'
    """
    a = set(_check_subset(a, n, sized=False))
    return LatticePath("".join("D" if i in a else "U" for i in range(2, n + 1)))


def phi(a, n: int, convention: str = "span") -> ValueSet:
    """Indices of up steps strictly below the axis and down steps weakly above it.

    Position relative to the axis is judged on the whole step (its lower
    and upper endpoints), so an up step ending on the axis is not strictly
    below it and a down step ending on the axis is weakly above it.
    ``convention="start"`` judges by the starting height alone; it exists
    only to show that reading disagrees with ``psi``.
    """
    if convention not in ("span", "start"):
        raise DomainError(f"unknown convention {convention!r}")
    a = _check_subset(a, n, sized=True)
    path = lattice_path_from_subset(a, n)
    out = []
    h = 0
    for i, step in enumerate(path.steps, start=2):
        nxt = h + 1 if step == "U" else h - 1
        if convention == "span":
            hit = (step == "U" and nxt < 0) or (step == "D" and nxt >= 0)
        else:
            hit = (step == "U" and h < 0) or (step == "D" and h >= 0)
        if hit:
            out.append(i)
        h = nxt
    return tuple(out)
