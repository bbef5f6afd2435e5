"""Two routes from a subset of [2, n] to an admissible set: through an
interleaved permutation, and through a lattice path."""

import itertools

from pinnacle.bijections import (
    interleaved_from_subset, lattice_path_from_subset, phi, psi, right_canonical,
)
from pinnacle.perm import pinnacle_set

a, n = {2, 3, 7, 9}, 9
w = interleaved_from_subset(a, n)
print("A =", sorted(a), "n =", n)
print("interleaved     ", "".join(map(str, w)), "pinnacles", pinnacle_set(w))
print("psi(A)          ", psi(a, n))

path = lattice_path_from_subset(a, n)
print("lattice path    ", path, "heights", path.heights)
print("phi(A)          ", phi(a, n))

# going back: the greedy right-canonical word for the image set
print("right canonical ", "".join(map(str, right_canonical(psi(a, n), n))))

print()
for n in range(2, 13):
    k = (n - 1) // 2
    subsets = list(itertools.combinations(range(2, n + 1), k))
    agree = all(phi(s, n) == psi(s, n) for s in subsets)
    print(f"n={n:2d}  {len(subsets):4d} subsets  phi == psi: {agree}")
