"""
Permutations in one-line notation and their value statistics.

Words are plain tuples of the values ``1..n``.  Value sets (pinnacles, vales,
admissible sets) are sorted tuples of positive integers.

>>> pinnacle_set((1, 8, 5, 2, 4, 3, 7, 6))
(4, 7, 8)
>>> peak_set((1, 8, 5, 2, 4, 3, 7, 6))
(2, 5, 7)
>>> cyclic_pinnacle_set(lift_to_cyclic((1, 3, 2)))
(3, 4)
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, SizeGuardError, UsageError

__all__ = [
    "ValueSet", "Permutation", "CyclicPermutation",
    "as_value_set", "format_set", "parse_set", "parse_word", "format_word",
    "pinnacle_set", "peak_set", "vale_set", "cyclic_pinnacle_set",
    "lift_to_cyclic", "all_permutations", "PERMUTATION_GUARD",
]

# a strictly increasing tuple of positive integers
ValueSet = tuple[int, ...]

# largest n that all_permutations sweeps without override
PERMUTATION_GUARD = 12


def as_value_set(values: Iterable[int]) -> ValueSet:
    """Sort and deduplicate; reject values below 1."""
    out = tuple(sorted(set(int(v) for v in values)))
    if out and out[0] < 1:
        raise DomainError(f"value sets hold positive integers, got {out[0]}")
    return out


def format_set(s: Iterable[int]) -> str:
    return ",".join(str(v) for v in s)


def parse_set(text: str) -> ValueSet:
    """Parse ``"4,7,9"`` into ``(4, 7, 9)``.

    Duplicates are dropped and the result is sorted.  An empty string (or
    ``"-"``) is the empty set.

    >>> parse_set("9,4,7")
    (4, 7, 9)
    >>> parse_set("3,3,5")
    (3, 5)
    """
    text = text.strip()
    if text in ("", "-", "{}"):
        return ()
    values = []
    for token in text.split(","):
        token = token.strip()
        if not re.fullmatch(r"\d+", token):
            raise UsageError(f"malformed set element {token!r} in {text!r}")
        v = int(token)
        if v < 1:
            raise UsageError(f"set elements must be positive, got {v}")
        values.append(v)
    return tuple(sorted(set(values)))


def parse_word(text: str) -> tuple[int, ...]:
    """Parse a space- or comma-separated word such as ``"1 8 5 2 4 3 7 6"``."""
    tokens = [t for t in re.split(r"[\s,]+", text.strip()) if t]
    if not tokens:
        raise UsageError("empty permutation")
    if not all(re.fullmatch(r"\d+", t) for t in tokens):
        raise UsageError(f"malformed permutation {text!r}")
    return tuple(int(t) for t in tokens)


def format_word(word: Iterable[int]) -> str:
    return " ".join(str(v) for v in word)


@dataclass(frozen=True)
class Permutation:
    """A permutation of ``[n]`` in one-line notation."""

    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(self.word)
        object.__setattr__(self, "word", word)
        if not word:
            raise DomainError("a permutation needs n >= 1")
        if sorted(word) != list(range(1, len(word) + 1)):
            raise DomainError(f"{word} is not a permutation of [{len(word)}]")

    @classmethod
    def parse(cls, text: str) -> Permutation:
        return cls(parse_word(text))

    @property
    def n(self) -> int:
        return len(self.word)

    def __len__(self):
        return len(self.word)

    def __iter__(self):
        return iter(self.word)

    def __getitem__(self, i):
        return self.word[i]

    def __str__(self):
        return format_word(self.word)


@dataclass(frozen=True)
class CyclicPermutation:
    """The rotation class ``[pi]``, stored as the rotation starting with 1."""

    representative: tuple[int, ...]

    def __post_init__(self):
        word = tuple(Permutation(self.representative).word)
        k = word.index(1)
        object.__setattr__(self, "representative", word[k:] + word[:k])

    @property
    def n(self) -> int:
        return len(self.representative)

    def rotations(self) -> list[tuple[int, ...]]:
        w = self.representative
        return [w[k:] + w[:k] for k in range(len(w))]

    def __str__(self):
        sep = "" if self.n < 10 else " "
        return "[" + sep.join(str(v) for v in self.representative) + "]"


def _word(p) -> Sequence[int]:
    return p.word if isinstance(p, Permutation) else p


def peak_set(p) -> ValueSet:
    """Positions ``i`` (1-indexed) with ``pi_{i-1} < pi_i > pi_{i+1}``."""
    w = _word(p)
    return tuple(i + 1 for i in range(1, len(w) - 1)
                 if w[i - 1] < w[i] > w[i + 1])


def pinnacle_set(p) -> ValueSet:
    """Values sitting at peak positions, sorted."""
    w = _word(p)
    return tuple(sorted(w[i] for i in range(1, len(w) - 1)
                        if w[i - 1] < w[i] > w[i + 1]))


def vale_set(p, boundary: str = "interior") -> ValueSet:
    """Values smaller than both neighbours.

    With ``boundary="sentinel"`` the word is padded with +infinity on both
    sides, so a first or last entry smaller than its single neighbour counts.
    A permutation with ``d`` pinnacles then always has ``d + 1`` vales,
    one of them 1.
    """
    w = list(_word(p))
    if boundary == "interior":
        return tuple(sorted(w[i] for i in range(1, len(w) - 1)
                            if w[i - 1] > w[i] < w[i + 1]))
    if boundary != "sentinel":
        raise DomainError(f"boundary must be 'interior' or 'sentinel', got {boundary!r}")
    inf = len(w) + 1
    padded = [inf] + w + [inf]
    return tuple(sorted(padded[i] for i in range(1, len(padded) - 1)
                        if padded[i - 1] > padded[i] < padded[i + 1]))


def cyclic_pinnacle_set(c) -> ValueSet:
    """Pinnacles of a cyclic permutation, indices taken modulo n."""
    w = c.representative if isinstance(c, CyclicPermutation) else tuple(_word(c))
    n = len(w)
    if n < 2:
        return ()
    return tuple(sorted(w[i] for i in range(n)
                        if w[i - 1] < w[i] > w[(i + 1) % n]))


def lift_to_cyclic(p) -> CyclicPermutation:
    """Append ``n + 1`` and close the word into a circle.

    The pinnacles of the result are those of ``p`` together with ``n + 1``.
    """
    w = tuple(_word(p))
    return CyclicPermutation(w + (len(w) + 1,))


def all_permutations(n: int, override_guard: bool = False) -> Iterator[tuple[int, ...]]:
    """Every word of ``S_n`` once, in lexicographic order."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if n > PERMUTATION_GUARD and not override_guard:
        raise SizeGuardError(
            f"refusing to enumerate {n}! permutations (guard n <= {PERMUTATION_GUARD})")
    return itertools.permutations(range(1, n + 1))
