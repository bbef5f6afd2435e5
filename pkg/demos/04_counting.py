"""Four exact ways to count permutations of [n] with a given pinnacle set,
checked against brute force and then pushed to n = 1000."""

import time

from pinnacle.counting import (
    count_by_ordering, count_closed, count_composition, count_dale, count_vale,
)
from pinnacle.oracle import brute_count

for s, n in [((3,), 6), ((4, 7), 8), ((4, 7, 9), 9), ((3, 5, 7, 9), 9)]:
    row = [count_dale(s, n), count_composition(s, n), count_vale(s, n), brute_count(s, n)]
    if len(s) <= 2:
        row.append(count_closed(s, n))
    print(f"S={s} n={n}: {row}")

# the same count split by left-to-right pinnacle order
s, n = (3, 5, 7), 8
parts = {sig: count_by_ordering(s, n, sig) for sig in [(3, 5, 7), (5, 3, 7), (7, 3, 5), (7, 5, 3)]}
print()
print("by ordering", parts, "sum", sum(parts.values()), "total", count_dale(s, n))

print()
s = tuple(range(3, 50, 5))
t0 = time.perf_counter()
big = count_composition(s, 1000)
print(f"S={s} n=1000: {len(str(big))} digits in {time.perf_counter() - t0:.2f}s")
print(str(big)[:60] + "...")
