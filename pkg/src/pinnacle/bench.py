"""
Runtime comparison of the counting algorithms.

Timings use ``time.perf_counter`` with the garbage collector paused, one
algorithm at a time on the calling thread.  Every algorithm's count for a
set is compared before the report is returned.
"""

from __future__ import annotations

import csv
import gc
import io
import json
import statistics
import time
from dataclasses import dataclass, field

from .admissible import require_admissible
from .counting import ALGORITHMS
from .errors import DomainError, IntegrityError
from .perm import ValueSet, format_set

__all__ = [
    "BenchSpec", "BenchRow", "BenchReport", "run_benchmark",
    "TABLE1_SETS", "TABLE2_N4_SETS", "TABLE2_N0_SETS", "CSV_COLUMNS",
]

# each row keeps n_1..n_{d-1} equal, growing down the table
TABLE1_SETS = [tuple(range(3, 3 + 10 * k, k)) for k in (2, 3, 4, 5)]
# d = 5, one gap grows: n_4 in the first, n_0 in the second
TABLE2_N4_SETS = [(3, 5, 7, 9, top) for top in (11, 21, 31, 41)]
TABLE2_N0_SETS = [tuple(range(lo, lo + 10, 2)) for lo in (3, 13, 23, 33)]

CSV_COLUMNS = ("set", "algo", "n", "reps", "mean_s", "min_s", "count")


@dataclass
class BenchSpec:
    sets: list
    n: int = 1000
    algorithms: tuple = ("vale", "composition")
    repetitions: int = 10
    warmup: int = 1
    # seconds per (set, algorithm); once spent, no further runs start
    time_cap: float | None = None

    def validate(self):
        if self.repetitions < 1:
            raise DomainError("repetitions must be >= 1")
        if self.warmup < 0:
            raise DomainError("warmup must be >= 0")
        for algo in self.algorithms:
            if algo not in ALGORITHMS:
                raise DomainError(f"unknown algorithm {algo!r}")
        sets = [require_admissible(s, self.n) for s in self.sets]
        if "closed" in self.algorithms and any(len(s) > 2 for s in sets):
            raise DomainError("the closed forms only cover |S| <= 2")
        return sets


@dataclass
class BenchRow:
    set: ValueSet
    algo: str
    n: int
    reps: int
    mean_s: float
    min_s: float
    count: str
    capped: bool = False

    def as_csv(self):
        return [format_set(self.set), self.algo, self.n, self.reps,
                f"{self.mean_s:.6g}", f"{self.min_s:.6g}", self.count]


@dataclass
class BenchReport:
    rows: list = field(default_factory=list)

    def row(self, s, algo) -> BenchRow:
        for r in self.rows:
            if r.set == tuple(s) and r.algo == algo:
                return r
        raise KeyError((s, algo))

    def to_csv(self, path=None) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in self.rows:
            w.writerow(r.as_csv())
        text = buf.getvalue()
        if path is not None:
            with open(path, "w", newline="") as fh:
                fh.write(text)
        return text

    def to_json(self) -> str:
        return json.dumps([
            {"set": format_set(r.set), "algo": r.algo, "n": r.n, "reps": r.reps,
             "mean_s": r.mean_s, "min_s": r.min_s, "count": r.count,
             "capped": r.capped}
            for r in self.rows], indent=2)


def _timed(fn, s, n):
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        t0 = time.perf_counter()
        value = fn(s, n)
        dt = time.perf_counter() - t0
    finally:
        if gc_was_enabled:
            gc.enable()
    return value, dt


def run_benchmark(spec: BenchSpec, progress=None) -> BenchReport:
    """Time every algorithm on every set.

    With a ``time_cap`` a cell stops starting new runs once the cap is
    spent.  A warmup run that alone exceeds the cap is kept as the single
    measurement and the row is flagged ``capped``.
    """
    sets = spec.validate()
    report = BenchReport()
    for s in sets:
        counts = {}
        for algo in spec.algorithms:
            fn = ALGORITHMS[algo]
            times = []
            spent = 0.0
            capped = False
            value = None
            for _ in range(spec.warmup):
                value, dt = _timed(fn, s, spec.n)
                spent += dt
                if spec.time_cap is not None and spent >= spec.time_cap:
                    times.append(dt)
                    capped = True
                    break
            if not capped:
                for _ in range(spec.repetitions):
                    value, dt = _timed(fn, s, spec.n)
                    times.append(dt)
                    spent += dt
                    if spec.time_cap is not None and spent >= spec.time_cap:
                        capped = len(times) < spec.repetitions
                        break
            counts[algo] = value
            row = BenchRow(s, algo, spec.n, len(times), statistics.fmean(times),
                           min(times), str(value), capped)
            report.rows.append(row)
            if progress is not None:
                progress(row)
        if len(set(counts.values())) > 1:
            raise IntegrityError(f"algorithms disagree on {format_set(s)}: {counts}")
    return report
