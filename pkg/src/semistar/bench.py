"""Operation counts and timings of the block star, for checking its cost recurrences."""
from __future__ import annotations

import csv
import time
from dataclasses import asdict, dataclass
from typing import Iterable, List, Optional, TextIO

from .generators import random_matrix, random_nilpotent
from .matrix import OpCounter, mat_add, mat_mul, star_block
from .semiring import get_semiring, is_undefined

__all__ = ["BenchRecord", "CSV_HEADER", "measure_star", "run_bench", "write_csv"]

CSV_HEADER = ["n", "adds", "muls", "stars", "temp_cells", "wall_time"]


@dataclass
class BenchRecord:
    n: int
    semiring: str
    adds: int
    muls: int
    stars: int
    temp_cells: int
    wall_time: float

    @property
    def total(self) -> int:
        return self.adds + self.muls + self.stars


def bench_matrix(semiring, n: int, seed):
    """Input for one benchmark run; nilpotent where a dense draw could lack a star."""
    sr = get_semiring(semiring)
    if sr.id in ("nat", "rational"):
        return random_nilpotent(sr, n, seed, permute=False)
    return random_matrix(sr, n, n, seed)


def measure_star(M, multiply: str = "naive", side: str = "right") -> BenchRecord:
    ctr = OpCounter()
    t0 = time.perf_counter()
    N = star_block(M, side, ctr, multiply=multiply)
    elapsed = time.perf_counter() - t0
    if is_undefined(N):
        raise ValueError(f"benchmark input has no star: {N.reason}")
    return BenchRecord(M.rows, M.semiring.id, ctr.adds, ctr.muls, ctr.stars, ctr.temp_cells, elapsed)


def measure_add(M) -> int:
    ctr = OpCounter()
    mat_add(M, M, ctr)
    return ctr.total


def measure_mul(M) -> int:
    ctr = OpCounter()
    mat_mul(M, M, ctr)
    return ctr.total


def run_bench(sizes: Iterable[int], semiring="bool", trials: int = 1, seed: int = 0,
              multiply: str = "naive") -> List[BenchRecord]:
    records = []
    for n in sizes:
        for t in range(trials):
            M = bench_matrix(semiring, n, seed * 1_000_003 + n * 1009 + t)
            records.append(measure_star(M, multiply))
    return records


def write_csv(records: Iterable[BenchRecord], fh: TextIO) -> None:
    w = csv.DictWriter(fh, fieldnames=CSV_HEADER, extrasaction="ignore", lineterminator="\n")
    w.writeheader()
    for r in records:
        row = asdict(r)
        row["wall_time"] = f"{r.wall_time:.6f}"
        w.writerow(row)
