"""
Counting permutations with a prescribed pinnacle set.

Four independent routes to ``p_S(n) = #{pi in S_n : Pin(pi) = S}``:

* :func:`count_dale` sums over subsets ``B`` of the master dale set with
  ``|B| <= d`` (inclusion-exclusion over empty dales),
* :func:`count_composition` groups those subsets by rank multiplicity,
  ``alpha in {0,1,2}^d``, weighting each class by ``2^o``,
* :func:`count_closed` covers ``|S| <= 2`` in closed form,
* :func:`count_vale` sums over the possible vale sets ``T`` of realizing
  permutations.

All arithmetic is on Python ints.  Intermediate sums are signed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb, factorial
from typing import Iterator, Sequence

from .admissible import require_admissible
from .dales import (
    Dale, GapProfile, compositions, cyclic_ordering_from_linear,
    dale_rank_set, master_dales, selection_params,
)
from .errors import DomainError, UnsupportedSizeError
from .perm import ValueSet

__all__ = [
    "count_dale", "count_composition", "count_closed", "count_vale",
    "count_by_ordering", "orderings_containing", "tau_count_formula",
    "vale_compositions", "enumerate_vale_sets", "count_vale_sets",
    "ValeSetFamily", "ALGORITHMS", "count",
]


def _profile(s, n: int) -> GapProfile:
    s = require_admissible(s, n)
    return GapProfile(s, n)


class _PowCache(dict):
    """``(base, i) -> base ** n_i`` for one gap profile."""

    def __init__(self, gaps):
        super().__init__()
        self.gaps = gaps

    def __missing__(self, key):
        base, i = key
        value = self[key] = base ** self.gaps[i]
        return value


def _tau_weight(d: int, r: Sequence[int]) -> int:
    """``(d - b)! * prod_{i<b} (d + 1 - i - r_{b-i})``; ``r`` sorted ascending."""
    b = len(r)
    w = factorial(d - b)
    for i in range(b):
        f = d + 1 - i - r[b - 1 - i]
        if f <= 0:
            return 0
        w *= f
    return w


def _gap_product(d: int, bvec: Sequence[int], pows: _PowCache) -> int:
    """``prod_{i=0}^{d} (d + 1 - i - b_{i+1})^{n_i}``."""
    out = 1
    for i in range(d + 1):
        base = d + 1 - i - bvec[i]
        if base == 0 and pows.gaps[i] > 0:
            return 0
        out *= pows[base, i]
    return out


def _scale(total: int, n: int, d: int) -> int:
    """Multiply by ``2^(n - 2d - 1)``; exact division when the exponent is negative."""
    e = n - 2 * d - 1
    if e >= 0:
        return total << e
    q, rem = divmod(total, 1 << -e)
    assert rem == 0, "non-integral count"
    return q


def count_dale(s, n: int) -> int:
    """Sum over all ``B`` in the master dale set with ``|B| <= d``."""
    prof = _profile(s, n)
    d = prof.d
    if d == 0:
        return 1 << (n - 1)
    pows = _PowCache(prof.gaps)
    total = 0
    dales = master_dales(d)
    for b in range(d + 1):
        sign = -1 if b % 2 else 1
        for B in itertools.combinations(dales, b):
            r, bvec = selection_params([x.rank for x in B], d)
            w = _tau_weight(d, r)
            if w:
                total += sign * w * _gap_product(d, bvec, pows)
    out = _scale(total, n, d)
    assert out >= 0
    return out


def count_composition(s, n: int) -> int:
    """Same count, one term per rank-multiplicity vector ``alpha`` with weight ``2^o``."""
    prof = _profile(s, n)
    d = prof.d
    if d == 0:
        return 1 << (n - 1)
    pows = _PowCache(prof.gaps)
    total = 0
    for alpha in compositions(d, max_total=d):
        r = [i for i, a in enumerate(alpha, start=1) for _ in range(a)]
        w = _tau_weight(d, r)
        if not w:
            continue
        bvec = [0] * (d + 1)
        acc = 0
        for i in range(d - 1, -1, -1):
            acc += alpha[i]
            bvec[i] = acc
        o = alpha.count(1)
        term = (w << o) * _gap_product(d, bvec, pows)
        total += -term if len(r) % 2 else term
    out = _scale(total, n, d)
    assert out >= 0
    return out


def count_closed(s, n: int) -> int:
    """Closed forms for ``|S| = 0, 1, 2``.

    >>> count_closed((), 6), count_closed((3,), 4), count_closed((3, 5), 5)
    (32, 4, 4)
    """
    prof = _profile(s, n)
    s = prof.s
    if len(s) == 0:
        return 1 << (n - 1)
    if len(s) == 1:
        (l,) = s
        return (1 << (n - 2)) * ((1 << (l - 2)) - 1)
    if len(s) == 2:
        l, m = s
        return (1 << (n + m - l - 5)) * (3 ** (l - 1) - (1 << l) + 1) \
            - (1 << (n - 3)) * ((1 << (l - 2)) - 1)
    raise UnsupportedSizeError(f"closed forms cover |S| <= 2, got |S| = {len(s)}")


# -- per-ordering counts ---------------------------------------------------

def count_by_ordering(s, n: int, sigma: Sequence[int]) -> int:
    """Permutations with pinnacle set ``s`` whose pinnacles read ``sigma`` left to right.

    ``sigma`` is closed into a cyclic ordering by appending the sentinel
    ``n + 1``; inclusion-exclusion then runs over the subsets of that
    ordering's dale rank set only.
    """
    prof = _profile(s, n)
    d = prof.d
    tau = cyclic_ordering_from_linear(prof.s, sigma)
    if d == 0:
        return 1 << (n - 1)
    pows = _PowCache(prof.gaps)
    dales = sorted(dale_rank_set(tau))
    total = 0
    # B = full dale set has b_1 = d + 1 and vanishes
    for b in range(len(dales)):
        sign = -1 if b % 2 else 1
        for B in itertools.combinations(dales, b):
            _, bvec = selection_params([x.rank for x in B], d)
            total += sign * _gap_product(d, bvec, pows)
    out = _scale(total, n, d)
    assert out >= 0
    return out


def tau_count_formula(B: Sequence[Dale], d: int) -> int:
    """Cyclic orderings of ``1..d+1`` whose dale set contains ``B`` (``|B| <= d``)."""
    if len(B) > d:
        raise DomainError(f"|B| = {len(B)} exceeds d = {d}")
    return _tau_weight(d, sorted(x.rank for x in B))


def orderings_containing(d: int) -> dict[frozenset, int]:
    """Brute force: for each ``B`` with ``|B| <= d``, the number of cyclic
    orderings ``[tau]`` of ``1..d+1`` with ``B`` inside their dale set."""
    counts: dict[frozenset, int] = {}
    for rest in itertools.permutations(range(1, d + 1)):
        dales = sorted(dale_rank_set(rest + (d + 1,)))
        for b in range(min(d, len(dales)) + 1):
            for B in itertools.combinations(dales, b):
                key = frozenset(B)
                counts[key] = counts.get(key, 0) + 1
    return counts


# -- vale sets ---------------------------------------------------------------

def vale_compositions(d: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``d`` into ``d`` parts with every prefix sum ``>= k``."""
    def extend(prefix, total):
        k = len(prefix)
        if k == d:
            if total == d:
                yield tuple(prefix)
            return
        for a in range(d - total + 1):
            if total + a >= k + 1:
                prefix.append(a)
                yield from extend(prefix, total + a)
                prefix.pop()
    if d == 0:
        yield ()
        return
    yield from extend([], 0)


def _vale_pools(s: ValueSet) -> list[list[int]]:
    """Candidate vale values per slot: ``[2, s_1)`` then ``(s_{i-1}, s_i)``."""
    pools = [list(range(2, s[0]))]
    for i in range(1, len(s)):
        pools.append(list(range(s[i - 1] + 1, s[i])))
    return pools


@dataclass
class ValeSetFamily:
    s: ValueSet
    n: int
    members: list = field(default_factory=list)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def enumerate_vale_sets(s, n: int) -> ValeSetFamily:
    """Every possible (sentinel) vale set ``T`` of a permutation with pinnacle set ``s``."""
    prof = _profile(s, n)
    s = prof.s
    fam = ValeSetFamily(s, n)
    if not s:
        fam.members.append((1,))
        return fam
    pools = _vale_pools(s)
    for alpha in vale_compositions(len(s)):
        choices = [itertools.combinations(pool, a) for pool, a in zip(pools, alpha)]
        for picks in itertools.product(*choices):
            fam.members.append(tuple(sorted((1,) + sum(picks, ()))))
    return fam


def count_vale_sets(s, n: int) -> int:
    prof = _profile(s, n)
    d, g = prof.d, prof.gaps
    total = 0
    for alpha in vale_compositions(d):
        if d == 0:
            return 1
        term = comb(g[0] - 1, alpha[0])
        for i in range(1, d):
            term *= comb(g[i], alpha[i])
            if not term:
                break
        total += term
    return total


def count_vale(s, n: int, printed_binomial: bool = False) -> int:
    """Sum over vale sets ``T`` of pinnacle and non-vale weights.

    With ``N(i) = #{t in T : t < i} - #{s in S : s < i}`` each pinnacle
    contributes ``N(s) * (N(s) - 1)`` and each other non-vale value ``t``
    contributes ``N(t)``.  ``printed_binomial=True`` swaps the pinnacle
    factor for ``C(N(s), 2)``; that variant undercounts by ``2^d`` and is
    kept only for comparison.

    Values above ``max S`` have ``N = 1``, so the ambient ``n`` enters only
    through the power of two in front.
    """
    prof = _profile(s, n)
    s = prof.s
    d = len(s)
    if d == 0:
        return 1 << (n - 1)
    pools = _vale_pools(s)
    sizes = [len(p) for p in pools]

    def pin_factor(N):
        return N * (N - 1) // 2 if printed_binomial else N * (N - 1)

    total = 0

    # slot g covers the values below s_{g+1}; the pinnacle s_{g+1} closes it.
    # count = |T| so far (1 counts), g pinnacles already passed.
    def walk(g, count, acc):
        nonlocal total
        if g == d:
            if count == d + 1:
                total += acc
            return
        size = sizes[g]
        lo = g + 2 - count          # prefix condition: count' - g >= 2
        hi = min(size, d + 1 - count)
        for k in range(max(lo, 0), hi + 1):
            closing = pin_factor(count + k - g)
            for picks in itertools.combinations(range(size), k):
                # runs of non-vales between picked positions share one N
                prod = closing
                prev = -1
                for j, pos in enumerate(picks):
                    run = pos - prev - 1
                    if run:
                        prod *= (count + j - g) ** run
                    prev = pos
                run = size - prev - 1
                if run:
                    prod *= (count + k - g) ** run
                if prod:
                    walk(g + 1, count + k, acc * prod)

    walk(0, 1, 1)
    out = _scale(total, n, d)
    assert out >= 0
    return out


ALGORITHMS = {
    "dale": count_dale,
    "composition": count_composition,
    "vale": count_vale,
    "closed": count_closed,
}


def count(s, n: int, algo: str = "composition") -> int:
    try:
        fn = ALGORITHMS[algo]
    except KeyError:
        raise DomainError(f"unknown algorithm {algo!r}; choose from {sorted(ALGORITHMS)}")
    return fn(s, n)
