"""
Table reproduction: toppling counts, toppleable sequence, Turán AUSO
counts, Seidel rows and excedance class sizes as output records.
"""
from typing import List, Optional

from src.combinatorics.excedance import count_class_formula, toppleable_count
from src.combinatorics.genocchi import seidel
from src.combinatorics.perm_core import all_permutations
from src.combinatorics.toppling import count_r_toppleable, is_toppleable
from src.generators.base import Record
from src.graphs.formulas import turan_u
from src.utils.logger import logger


class TableServiceError(Exception):
    """Raised for invalid table ranges."""

    pass


def _check_range(low: int, high: int, what: str) -> None:
    if high < low:
        raise TableServiceError(f"{what} needs an upper bound of at least {low}, got {high}")


def build_toppling_table(n_max: int, n_min: int = 3, workers: int = 1) -> List[Record]:
    """One row per n with columns r1..r{n_max+1}; cells beyond n+1 are empty"""
    _check_range(n_min, n_max, "toppling table")
    records = []
    for n in range(n_min, n_max + 1):
        row: Record = {"n": n}
        for r in range(1, n_max + 2):
            row[f"r{r}"] = count_r_toppleable(n, r, workers) if r <= n + 1 else None
        logger.info(f"Toppling table row n={n} done")
        records.append(row)
    return records


def build_toppleable_sequence(n_max: int, n_min: int = 2, simulate: bool = False) -> List[Record]:
    """t(n) from the closed form, or by simulating every r when `simulate`"""
    _check_range(n_min, n_max, "toppleable sequence")
    records = []
    for n in range(n_min, n_max + 1):
        if simulate:
            value = sum(1 for p in all_permutations(n) if is_toppleable(p))
        else:
            value = toppleable_count(n)
        records.append({"n": n, "t": value})
    return records


def build_turan_table(n_max: int) -> List[Record]:
    """u_{n,r} rows with columns r1..r{n_max}"""
    _check_range(1, n_max, "Turán table")
    records = []
    for n in range(1, n_max + 1):
        row: Record = {"n": n}
        for r in range(1, n_max + 1):
            row[f"r{r}"] = turan_u(n, r) if r <= n else None
        records.append(row)
    return records


def build_seidel_rows(rows: int) -> List[Record]:
    """Seidel rows with columns k2..; cells outside a row's band are empty"""
    _check_range(1, rows, "Seidel triangle")
    triangle = seidel(rows)
    width = max(len(row) for row in triangle.rows)
    records = []
    for n, row in enumerate(triangle.rows, start=1):
        record: Record = {"n": n}
        for idx in range(width):
            record[f"k{idx + 2}"] = row[idx] if idx < len(row) else None
        records.append(record)
    return records


def build_excedance_table(n_max: int, m: Optional[int] = None) -> List[Record]:
    """a_{n,m} for 1 <= n <= n_max and 0 <= m < n (or a single m)"""
    _check_range(1, n_max, "excedance table")
    records = []
    for n in range(1, n_max + 1):
        levels = range(n) if m is None else ([m] if m < n else [])
        for level in levels:
            records.append({"n": n, "m": level, "count": count_class_formula(level, n - level)})
    return records
