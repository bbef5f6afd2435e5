"""Orders in which the pinnacles of a set can appear from left to right."""

from pinnacle.oracle import brute_orderings
from pinnacle.orderings import (
    count_orderings, count_orderings_composition, enumerate_orderings,
    is_admissible_ordering,
)

s = (3, 5, 7)
for sigma in [(3, 5, 7), (5, 3, 7), (3, 7, 5), (7, 5, 3)]:
    print("".join(map(str, sigma)), "admissible" if is_admissible_ordering(s, sigma) else "not admissible")

print()
for s in [(3, 5, 7), (4, 7, 9), (3, 5, 7, 9), (5, 6, 8)]:
    listed = ["".join(map(str, o)) for o in enumerate_orderings(s)]
    print(f"S={s}: {count_orderings(s)} (composition form {count_orderings_composition(s)}, "
          f"scan {len(brute_orderings(s))})  {' '.join(listed)}")
