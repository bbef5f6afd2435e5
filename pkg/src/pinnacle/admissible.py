"""
Admissible pinnacle sets, their counts, and ballot sequences.

A set ``s_1 < ... < s_d`` is the pinnacle set of some permutation exactly
when ``s_i > 2i`` for every ``i``.  Sets with maximum ``m`` and size ``d``
are counted by a ballot number, and :func:`eta` / :func:`eta_inv` give the
explicit correspondence with ballot words over ``{X, Y}``.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb, factorial
from typing import Iterator

from .errors import DomainError, SizeGuardError
from .perm import ValueSet, as_value_set

__all__ = [
    "is_admissible", "enumerate_admissible", "count_admissible",
    "pinnacle_count", "pd_polynomial", "catalan",
    "is_ballot", "count_ballot", "enumerate_ballot", "eta", "eta_inv",
    "BALLOT_GUARD",
]

BALLOT_GUARD = 24


def is_admissible(s) -> bool:
    """True iff the i-th smallest element exceeds 2i for every i.

    >>> is_admissible((4, 7, 9)), is_admissible((2,)), is_admissible(())
    (True, False, True)
    """
    return all(v > 2 * i for i, v in enumerate(sorted(s), start=1))


def require_admissible(s, n: int | None = None) -> ValueSet:
    """Normalise ``s`` and check it is admissible (and inside ``[3, n]``)."""
    s = as_value_set(s)
    if not is_admissible(s):
        raise DomainError(f"{{{','.join(map(str, s))}}} is not admissible (need s_i > 2i)")
    if n is not None:
        if n < 1:
            raise DomainError(f"n must be >= 1, got {n}")
        if s and s[-1] > n:
            raise DomainError(f"max S = {s[-1]} exceeds n = {n}")
    return s


def enumerate_admissible(n: int) -> list[ValueSet]:
    """All admissible subsets of ``[3, n]`` (the empty set included), lexicographic."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    out = []
    # s_i > 2i forces d <= (n - 1) // 2
    for d in range((n - 1) // 2 + 1):
        for s in itertools.combinations(range(3, n + 1), d):
            if is_admissible(s):
                out.append(s)
    out.sort()
    return out


def count_admissible(n: int) -> int:
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return comb(n - 1, (n - 1) // 2)


def catalan(d: int) -> int:
    return comb(2 * d, d) // (d + 1)


def pinnacle_count(m: int, d: int) -> int:
    """Number of admissible sets with maximum ``m`` and ``d`` elements."""
    if m < 1 or d < 1:
        raise DomainError(f"m and d must be positive, got m={m}, d={d}")
    if m <= 2 * d:
        return 0
    num = comb(m - 1, d - 1) * (m - 2 * d + 1)
    q, rem = divmod(num, m - 1)
    assert rem == 0, f"(m-1) does not divide numerator at m={m}, d={d}"
    return q


def pd_polynomial(d: int, m) -> Fraction:
    """Evaluate the degree ``d - 1`` polynomial that agrees with
    :func:`pinnacle_count` for ``m > 2d``.

    ``m`` may be any integer or rational.  For ``d = 1`` the polynomial is
    the constant 1 (the product over ``2 <= i <= d - 1`` is read as
    ``1 / (m - 1)`` there, which cancels the leading factor).
    """
    if d < 1:
        raise DomainError(f"d must be >= 1, got {d}")
    m = Fraction(m)
    if d == 1:
        return Fraction(1)
    value = (m - 2 * d + 1) / factorial(d - 1)
    for i in range(2, d):
        value *= m - i
    return value


def is_ballot(word: str) -> bool:
    """Every nonempty prefix has more X than Y (and only X/Y letters)."""
    lead = 0
    for ch in word:
        if ch == "X":
            lead += 1
        elif ch == "Y":
            lead -= 1
        else:
            return False
        if lead <= 0:
            return False
    return True


def count_ballot(p: int, q: int) -> int:
    """Number of (p, q) ballot sequences, ``(p - q)/(p + q) * C(p + q, q)``."""
    if not p > q >= 0:
        raise DomainError(f"ballot numbers need p > q >= 0, got p={p}, q={q}")
    num = (p - q) * comb(p + q, q)
    q_, rem = divmod(num, p + q)
    assert rem == 0
    return q_


def enumerate_ballot(p: int, q: int, override_guard: bool = False) -> Iterator[str]:
    """Yield each (p, q) ballot sequence once, in lexicographic order (X < Y)."""
    if not p > q >= 0:
        raise DomainError(f"ballot sequences need p > q >= 0, got p={p}, q={q}")
    if p + q > BALLOT_GUARD and not override_guard:
        raise SizeGuardError(f"p + q = {p + q} exceeds guard {BALLOT_GUARD}")

    def extend(prefix, xs, ys):
        if xs == p and ys == q:
            yield "".join(prefix)
            return
        if xs < p:
            prefix.append("X")
            yield from extend(prefix, xs + 1, ys)
            prefix.pop()
        if ys < q and xs > ys + 1:
            prefix.append("Y")
            yield from extend(prefix, xs, ys + 1)
            prefix.pop()

    return extend([], 0, 0)


def eta(word: str, m: int) -> ValueSet:
    """Positions of the Y letters (1-indexed) together with ``m``.

    >>> eta("XXXYXXYX", 9)
    (4, 7, 9)
    """
    if len(word) != m - 1:
        raise DomainError(f"ballot word has length {len(word)}, expected m - 1 = {m - 1}")
    if not is_ballot(word):
        raise DomainError(f"{word!r} is not a ballot sequence")
    s = tuple(i for i, ch in enumerate(word, start=1) if ch == "Y") + (m,)
    # defined on B_{m-d, d-1} only when m > 2d, i.e. #X >= #Y + 2
    if m <= 2 * len(s):
        raise DomainError(f"m = {m} must exceed 2d = {2 * len(s)}")
    return s


def eta_inv(s) -> str:
    """The ballot word of length ``max(s) - 1`` with Y exactly at ``s - {max s}``."""
    s = as_value_set(s)
    if not s:
        raise DomainError("eta_inv needs a nonempty set")
    if not is_admissible(s):
        raise DomainError(f"{s} is not admissible")
    inner = set(s[:-1])
    return "".join("Y" if i in inner else "X" for i in range(1, s[-1]))
