"""
Exhaustive ground truth over small symmetric groups.

Everything here scans ``S_n`` directly, so it shares no code with the
formulas it checks beyond :func:`pinnacle_set` and :func:`vale_set`.
"""

from __future__ import annotations

import json
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from math import factorial

from .errors import SizeGuardError
from .perm import (
    ValueSet, all_permutations, as_value_set, format_set, pinnacle_set, vale_set,
)

__all__ = [
    "Distribution", "brute_count", "distribution", "brute_orderings",
    "ordering_table", "brute_vale_family", "ORACLE_GUARD", "VALE_GUARD",
]

ORACLE_GUARD = 9
VALE_GUARD = 8


def _guard(n: int, limit: int, override: bool):
    if n > limit and not override:
        raise SizeGuardError(f"oracle refuses n = {n} (guard n <= {limit})")


@dataclass
class Distribution:
    """Pinnacle-set histogram of ``S_n``."""

    n: int
    table: dict[ValueSet, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.table.values())

    def to_json(self) -> str:
        return json.dumps({format_set(k): str(v) for k, v in sorted(self.table.items())},
                          indent=2)


def brute_count(s, n: int, override_guard: bool = False) -> int:
    _guard(n, ORACLE_GUARD, override_guard)
    s = as_value_set(s)
    return sum(1 for p in all_permutations(n, override_guard) if pinnacle_set(p) == s)


def distribution(n: int, override_guard: bool = False) -> Distribution:
    _guard(n, ORACLE_GUARD, override_guard)
    table = Counter(pinnacle_set(p) for p in all_permutations(n, override_guard))
    dist = Distribution(n, dict(sorted(table.items())))
    assert dist.total == factorial(n)
    return dist


def _pinnacle_order(w) -> tuple[int, ...]:
    return tuple(w[i] for i in range(1, len(w) - 1) if w[i - 1] < w[i] > w[i + 1])


def ordering_table(m: int, override_guard: bool = False) -> dict[ValueSet, set]:
    """Realized left-to-right pinnacle orders of every pinnacle set in ``S_m``."""
    _guard(m, ORACLE_GUARD, override_guard)
    out: dict[ValueSet, set] = defaultdict(set)
    for p in all_permutations(m, override_guard):
        order = _pinnacle_order(p)
        out[tuple(sorted(order))].add(order)
    return dict(out)


def brute_orderings(s, override_guard: bool = False) -> set[tuple[int, ...]]:
    """Scan ``S_{max s}`` for the pinnacle orders of permutations with pinnacle set ``s``."""
    s = as_value_set(s)
    if not s:
        return {()}
    _guard(s[-1], ORACLE_GUARD, override_guard)
    found = set()
    for p in all_permutations(s[-1], override_guard):
        order = _pinnacle_order(p)
        if len(order) == len(s) and tuple(sorted(order)) == s:
            found.add(order)
    return found


def brute_vale_family(s, n: int, override_guard: bool = False) -> set[ValueSet]:
    _guard(n, VALE_GUARD, override_guard)
    s = as_value_set(s)
    return {vale_set(p, "sentinel") for p in all_permutations(n, override_guard)
            if pinnacle_set(p) == s}
