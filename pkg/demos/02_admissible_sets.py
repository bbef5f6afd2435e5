"""Which sets can be pinnacle sets, how many there are, and the ballot-word
encoding of a set through its maximum."""

from pinnacle.admissible import (
    catalan, count_admissible, count_ballot, enumerate_admissible, eta, eta_inv,
    pinnacle_count,
)

for n in range(1, 13):
    sets = enumerate_admissible(n)
    assert len(sets) == count_admissible(n)
    print(f"n={n:2d}  {len(sets):4d} admissible sets")

print()
print("max m, size d      count    ballot (m-d, d-1)")
for m in range(5, 12):
    for d in range(1, (m - 1) // 2 + 1):
        print(f"m={m:2d} d={d}   {pinnacle_count(m, d):8d}    {count_ballot(m - d, d - 1):8d}")

print()
print("sets of size d with max 2d+1 are Catalan:",
      [pinnacle_count(2 * d + 1, d) for d in range(1, 9)],
      [catalan(d) for d in range(1, 9)])

# Y letters mark the non-maximal elements
word = eta_inv((4, 7, 9))
print()
print("{4,7,9} <->", word, "->", eta(word, 9))
