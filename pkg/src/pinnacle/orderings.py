"""
Admissible orderings: arrangements of a pinnacle set that occur as the
left-to-right pinnacle order of some permutation.

None of this depends on the ambient ``n``; only the gaps below ``max S``
are read.
"""

from __future__ import annotations

import itertools
from typing import Sequence

from .admissible import require_admissible
from .dales import Dale, compositions, cyclic_ordering_from_linear, dale_rank_set
from .errors import DomainError, SizeGuardError
from .perm import ValueSet

__all__ = [
    "is_admissible_ordering", "count_orderings", "count_orderings_composition",
    "enumerate_orderings", "ORDERING_GUARD",
]

ORDERING_GUARD = 8


def _lower_gaps(s: ValueSet) -> list[int]:
    """Cumulative non-pinnacle counts ``n_0 + ... + n_{k-1}`` for ``k = 0..d``."""
    bounds = (0,) + s
    cum = [0]
    for i in range(len(s)):
        cum.append(cum[-1] + bounds[i + 1] - bounds[i] - 1)
    return cum


def _fits(ranks: Sequence[int], cum: Sequence[int]) -> bool:
    """``j <= n_0 + ... + n_{r_j - 1}`` for every ``j``."""
    return all(j <= cum[r] for j, r in enumerate(sorted(ranks), start=1))


def is_admissible_ordering(s, sigma: Sequence[int]) -> bool:
    """
    >>> is_admissible_ordering({3, 5, 7}, (5, 3, 7))
    True
    >>> is_admissible_ordering({3, 5, 7}, (3, 7, 5))
    False
    """
    s = require_admissible(s)
    tau = cyclic_ordering_from_linear(s, sigma)
    if not s:
        return True
    ranks = [x.rank for x in dale_rank_set(tau)]
    return _fits(ranks, _lower_gaps(s))


def _product(d: int, r: Sequence[int]) -> int:
    out = 1
    b = len(r)
    for i in range(b):
        out *= d + 1 - i - r[b - 1 - i]
    return out


def count_orderings(s, use_delta: bool = True) -> int:
    """Sum over ``(d-1)``-subsets ``B`` of the rank >= 2 dales.

    The product reads the ranks of ``B``; the feasibility test reads the
    ranks of ``B`` plus both rank-1 dales.  ``use_delta=False`` drops the
    test, which counts every ordering (``d!``).
    """
    s = require_admissible(s)
    d = len(s)
    if d == 0:
        return 1
    cum = _lower_gaps(s)
    upper = [Dale(i, side) for i in range(2, d + 1) for side in "lr"]
    total = 0
    for B in itertools.combinations(upper, d - 1):
        r = sorted(x.rank for x in B)
        if use_delta and not _fits([1, 1] + r, cum):
            continue
        total += _product(d, r)
    return total


def count_orderings_composition(s) -> int:
    """Same count over multiplicity vectors for ranks ``2..d``, weighted by ``2^o``."""
    s = require_admissible(s)
    d = len(s)
    if d == 0:
        return 1
    cum = _lower_gaps(s)
    total = 0
    for alpha in compositions(d - 1, total=d - 1):
        r = [i + 2 for i, a in enumerate(alpha) for _ in range(a)]
        if not _fits([1, 1] + r, cum):
            continue
        total += _product(d, r) << alpha.count(1)
    return total


def enumerate_orderings(s, override_guard: bool = False) -> list[tuple[int, ...]]:
    s = require_admissible(s)
    if len(s) > ORDERING_GUARD and not override_guard:
        raise SizeGuardError(f"|S| = {len(s)} exceeds ordering guard {ORDERING_GUARD}")
    return [sigma for sigma in itertools.permutations(s)
            if is_admissible_ordering(s, sigma)]
