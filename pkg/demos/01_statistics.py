"""Pinnacles, peaks and vales of one permutation, then the pinnacle-set
histogram of a small symmetric group."""

from pinnacle import Permutation, lift_to_cyclic, peak_set, pinnacle_set, vale_set
from pinnacle.oracle import distribution
from pinnacle.perm import cyclic_pinnacle_set, format_set

pi = Permutation((1, 8, 5, 2, 4, 3, 7, 6))
print("pi              ", pi)
# pinnacles are values, peaks are positions
print("pinnacle set    ", "{" + format_set(pinnacle_set(pi)) + "}")
print("peak set        ", "{" + format_set(peak_set(pi)) + "}")
print("vales (interior)", "{" + format_set(vale_set(pi)) + "}")
# padding both ends with +inf lets the first and last letters be vales
print("vales (sentinel)", "{" + format_set(vale_set(pi, "sentinel")) + "}")

cyc = lift_to_cyclic(pi)
print("cyclic lift     ", cyc, "pinnacles", "{" + format_set(cyclic_pinnacle_set(cyc)) + "}")

print()
for n in range(1, 7):
    dist = distribution(n)
    row = ", ".join(f"{{{format_set(s)}}}:{c}" for s, c in dist.table.items())
    print(f"S_{n} ({dist.total} perms)  {row}")
