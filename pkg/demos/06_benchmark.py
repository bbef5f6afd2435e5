"""Vale-set summation against the composition formula at n = 1000.

The composition formula costs about the same for every set of a given size,
while the number of vale sets to sum over explodes as the gaps widen.
Pass --full to include the last set (about a minute for the vale algorithm).
"""

import sys

from pinnacle.bench import TABLE1_SETS, BenchSpec, run_benchmark
from pinnacle.counting import count_vale_sets

sets = TABLE1_SETS if "--full" in sys.argv else TABLE1_SETS[:3]
for s in sets:
    print(f"S={s}: {count_vale_sets(s, 1000)} vale sets")

spec = BenchSpec(sets=sets, n=1000, algorithms=("composition", "vale"),
                 repetitions=3, warmup=1, time_cap=10.0)
report = run_benchmark(spec)
print()
sys.stdout.write(report.to_csv())
