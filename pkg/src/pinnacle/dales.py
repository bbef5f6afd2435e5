"""
Gap profiles, dale rank sets and their compressed forms.

A pinnacle set ``S = {s_1 < ... < s_d}`` inside ``[n]`` splits the
non-pinnacles into gaps ``n_i = s_{i+1} - s_i - 1`` (with ``s_0 = 0`` and
``s_{d+1} = n + 1``).  Dales are labelled ``i_l`` / ``i_r`` by the index of
the smaller of the two pinnacles around them and the side of that pinnacle
they sit on.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Sequence

from .errors import DomainError

__all__ = [
    "Dale", "GapProfile", "DaleSelection", "GapComposition",
    "master_dales", "dale_rank_set", "cyclic_ordering_from_linear",
    "selection_params", "compositions",
]


class Dale(NamedTuple):
    rank: int
    side: str   # "l" or "r"

    def __str__(self):
        return f"{self.rank}_{self.side}"

    @classmethod
    def parse(cls, text: str) -> Dale:
        rank, side = text.strip().split("_")
        if side not in ("l", "r"):
            raise DomainError(f"bad dale label {text!r}")
        return cls(int(rank), side)


@dataclass(frozen=True)
class GapProfile:
    s: tuple[int, ...]
    n: int
    gaps: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        s = tuple(self.s)
        object.__setattr__(self, "s", s)
        bounds = (0,) + s + (self.n + 1,)
        gaps = tuple(bounds[i + 1] - bounds[i] - 1 for i in range(len(s) + 1))
        if any(g < 0 for g in gaps):
            raise DomainError(f"set {s} does not fit in [{self.n}]")
        object.__setattr__(self, "gaps", gaps)

    @property
    def d(self) -> int:
        return len(self.s)


def master_dales(d: int) -> list[Dale]:
    """``1_l < 1_r < ... < d_l < d_r``."""
    return [Dale(i, side) for i in range(1, d + 1) for side in "lr"]


def selection_params(ranks: Sequence[int], d: int) -> tuple[list[int], list[int]]:
    """Return ``(r, bvec)`` for a multiset of dale ranks.

    ``r`` is the sorted list of ranks, ``bvec[i - 1]`` the number of ranks
    that are at least ``i`` for ``i = 1..d+1``.
    """
    r = sorted(ranks)
    bvec = [0] * (d + 2)
    for rank in r:
        bvec[rank] += 1
    for i in range(d, 0, -1):
        bvec[i] += bvec[i + 1]
    return r, bvec[1:d + 2]


@dataclass(frozen=True)
class DaleSelection:
    """A subset ``B`` of the master dale set together with ``b``, ``r`` and ``bvec``.

    >>> sel = DaleSelection.from_labels(["1_l", "3_l", "3_r", "4_r"], 4)
    >>> sel.r, sel.bvec
    ((1, 3, 3, 4), (4, 3, 3, 1, 0))
    """

    members: frozenset
    d: int

    @classmethod
    def from_labels(cls, labels, d: int) -> DaleSelection:
        return cls(frozenset(Dale.parse(x) if isinstance(x, str) else Dale(*x)
                             for x in labels), d)

    def __post_init__(self):
        for m in self.members:
            if not 1 <= m.rank <= self.d or m.side not in ("l", "r"):
                raise DomainError(f"dale {m} is not in the master set for d={self.d}")

    @property
    def b(self) -> int:
        return len(self.members)

    @property
    def r(self) -> tuple[int, ...]:
        return tuple(sorted(m.rank for m in self.members))

    @property
    def bvec(self) -> tuple[int, ...]:
        return tuple(selection_params([m.rank for m in self.members], self.d)[1])

    def composition(self) -> tuple[int, ...]:
        alpha = [0] * self.d
        for m in self.members:
            alpha[m.rank - 1] += 1
        return tuple(alpha)


@dataclass(frozen=True)
class GapComposition:
    """Rank multiplicities ``alpha_i in {0, 1, 2}`` standing in for ``2^o`` selections."""

    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if any(p not in (0, 1, 2) for p in self.parts):
            raise DomainError(f"parts must lie in {{0,1,2}}, got {self.parts}")

    @property
    def o(self) -> int:
        return sum(1 for p in self.parts if p == 1)

    @property
    def b(self) -> int:
        return sum(self.parts)

    @property
    def r(self) -> tuple[int, ...]:
        """``r_j = min{i : alpha_1 + ... + alpha_i >= j}``."""
        return tuple(i for i, p in enumerate(self.parts, start=1) for _ in range(p))

    @property
    def bvec(self) -> tuple[int, ...]:
        """Suffix sums ``b_i = alpha_i + ... + alpha_d`` for ``i = 1..d+1``."""
        out = [0]
        for p in reversed(self.parts):
            out.append(out[-1] + p)
        return tuple(reversed(out))


def compositions(length: int, max_total: int | None = None,
                 total: int | None = None) -> Iterator[tuple[int, ...]]:
    """Vectors over ``{0,1,2}`` of the given length, filtered by their sum."""
    for alpha in itertools.product((0, 1, 2), repeat=length):
        t = sum(alpha)
        if max_total is not None and t > max_total:
            continue
        if total is not None and t != total:
            continue
        yield alpha


def cyclic_ordering_from_linear(s: Sequence[int], sigma: Sequence[int]) -> tuple[int, ...]:
    """Index form of ``sigma`` followed by the sentinel index ``d + 1``."""
    s = tuple(sorted(s))
    if sorted(sigma) != list(s) or len(set(sigma)) != len(sigma):
        raise DomainError(f"ordering {tuple(sigma)} is not a rearrangement of {s}")
    index = {v: i for i, v in enumerate(s, start=1)}
    return tuple(index[v] for v in sigma) + (len(s) + 1,)


def dale_rank_set(tau: Sequence[int]) -> frozenset:
    """Dale labels of a cyclic ordering of the pinnacle indices ``1..d+1``.

    Each cyclically adjacent pair contributes the smaller index, marked
    ``r`` when the dale lies to its right and ``l`` when to its left.

    >>> sorted(str(x) for x in dale_rank_set((7, 6, 1, 2, 3, 5, 4)))
    ['1_l', '1_r', '2_r', '3_r', '4_l', '4_r', '6_l']
    """
    tau = tuple(tau)
    k = len(tau)
    if sorted(tau) != list(range(1, k + 1)):
        raise DomainError(f"{tau} is not an ordering of 1..{k}")
    if k < 2:
        return frozenset()
    out = set()
    for j in range(k):
        left, right = tau[j], tau[(j + 1) % k]
        if left < right:
            out.add(Dale(left, "r"))
        else:
            out.add(Dale(right, "l"))
    return frozenset(out)
