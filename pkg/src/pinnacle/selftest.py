"""Formula-versus-oracle sweep used by ``pinnacle selftest``."""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from math import factorial

from .admissible import count_admissible, enumerate_admissible, eta, eta_inv
from .bijections import phi, psi, right_canonical
from .counting import (
    count_by_ordering, count_closed, count_composition, count_dale, count_vale,
    count_vale_sets, enumerate_vale_sets,
)
from .oracle import brute_vale_family, distribution, ordering_table
from .orderings import count_orderings, count_orderings_composition, enumerate_orderings
from .perm import pinnacle_set


def _check_n(n: int) -> list[tuple[str, bool]]:
    out = []
    dist = distribution(n, override_guard=True).table
    sets = enumerate_admissible(n)

    ok = len(sets) == count_admissible(n)
    k = (n - 1) // 2
    image = [psi(a, n) for a in itertools.combinations(range(2, n + 1), k)]
    ok &= sorted(image) == sets
    out.append((f"n={n} admissible count", ok))

    out.append((f"n={n} phi=psi",
                all(phi(a, n) == psi(a, n)
                    for a in itertools.combinations(range(2, n + 1), k))))
    out.append((f"n={n} right canonical",
                all(pinnacle_set(right_canonical(s, n)) == s for s in sets)))

    ok = True
    for s in sets:
        truth = dist.get(s, 0)
        ok &= count_dale(s, n) == count_composition(s, n) == count_vale(s, n) == truth
        if len(s) <= 2:
            ok &= count_closed(s, n) == truth
    out.append((f"n={n} four-way agreement", ok))
    out.append((f"n={n} mass", sum(count_dale(s, n) for s in sets) == factorial(n)))

    ok = all(sum(count_by_ordering(s, n, sig) for sig in itertools.permutations(s))
             == dist.get(s, 0) for s in sets)
    out.append((f"n={n} ordering decomposition", ok))

    if n <= 9:
        table = ordering_table(n, override_guard=True)
        ok = True
        for s in sets:
            if s and s[-1] == n:
                ok &= count_orderings(s) == count_orderings_composition(s) \
                    == len(enumerate_orderings(s)) == len(table.get(s, ()))
        out.append((f"n={n} orderings", ok))

    if n <= 7:
        ok = all(brute_vale_family(s, n, override_guard=True)
                 == set(enumerate_vale_sets(s, n).members)
                 and count_vale_sets(s, n) == len(enumerate_vale_sets(s, n))
                 for s in sets)
        out.append((f"n={n} vale families", ok))

    ok = all(eta(eta_inv(s), s[-1]) == s for s in sets if s)
    out.append((f"n={n} eta round trip", ok))
    return out


def run_selftest(max_n: int = 7, workers: int | None = None) -> list[tuple[str, bool]]:
    if workers is None:
        workers = int(os.environ.get("PINNACLE_THREADS", "1") or 1)
    ns = range(1, max_n + 1)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_check_n, ns))
    else:
        parts = [_check_n(n) for n in ns]
    return [item for part in parts for item in part]
