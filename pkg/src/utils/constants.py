"""
Constants and reference values for toppleperm
"""
from typing import Dict, List, Tuple


# Enumeration budgets
class EnumerationConstants:
    # Brute-force orientation scans iterate 2^m masks
    MAX_ORIENTATION_EDGES = 20
    # Canonical topological sorts are generated by backtracking
    MAX_SORT_VERTICES = 10
    MAX_GRAPH_VERTICES = 24
    MAX_EXTREMAL_VERTICES = 7
    MAX_CHROMATIC_EDGES = 21
    CHROMATIC_CACHE_SIZE = 200_000

    # Exhaustive permutation scans
    MAX_SCAN_N = 12


# Toppling engine limits
class TopplingConstants:
    # Any legal run needs fewer than n * (n + 3) topples
    CAP_FACTOR_OFFSET = 3
    SCHEDULE_PASS = "pass"
    SCHEDULE_RANDOM = "random"
    SCHEDULES = (SCHEDULE_PASS, SCHEDULE_RANDOM)


# Output formats
class OutputConstants:
    FORMAT_JSON = "json"
    FORMAT_CSV = "csv"
    FORMAT_BFILE = "bfile"
    FORMATS = (FORMAT_JSON, FORMAT_CSV, FORMAT_BFILE)
    DEFAULT_FORMAT = FORMAT_CSV


# Process exit codes
class ExitCodes:
    SUCCESS = 0
    VERIFICATION_FAILED = 1
    USAGE_ERROR = 2


# Known values used by the verification suites
class ReferenceValues:
    # t_r(n) for n = 3..8 and r = 1..n+1
    TOPPLEABLE_BY_R: Dict[int, List[int]] = {
        3: [4, 3, 3, 4],
        4: [14, 10, 7, 7, 8],
        5: [46, 38, 31, 31, 38, 46],
        6: [230, 184, 146, 115, 115, 130, 146],
        7: [1066, 920, 790, 675, 675, 790, 920, 1066],
        8: [6902, 5836, 4916, 4126, 3451, 3451, 3842, 4264, 4718],
    }

    # t(n) for n = 2..8
    TOPPLEABLE: Dict[int, int] = {
        2: 1, 3: 3, 4: 7, 5: 31, 6: 115, 7: 675, 8: 3451,
    }

    # u_{n,r} for 1 <= r <= n <= 7
    TURAN_AUSO: Dict[int, List[int]] = {
        1: [1],
        2: [0, 1],
        3: [0, 1, 2],
        4: [0, 3, 4, 6],
        5: [0, 7, 14, 18, 24],
        6: [0, 31, 64, 78, 96, 120],
        7: [0, 115, 284, 426, 504, 600, 720],
    }

    # Seidel triangle rows 1..10, columns k = 2..
    SEIDEL_ROWS: Dict[int, List[int]] = {
        1: [1],
        2: [1],
        3: [1, 1],
        4: [2, 1],
        5: [2, 3, 3],
        6: [8, 6, 3],
        7: [8, 14, 17, 17],
        8: [56, 48, 34, 17],
        9: [56, 104, 138, 155, 155],
        10: [608, 552, 448, 310, 155],
    }

    GENOCCHI_FIRST: Tuple[int, ...] = (1, 1, 3, 17, 155, 2073, 38227, 929569)
    GENOCCHI_MEDIAN: Tuple[int, ...] = (1, 2, 8, 56, 608, 9440, 198272, 5410688)
    GENOCCHI_NORMALIZED: Tuple[int, ...] = (1, 1, 2, 7, 38, 295, 3098, 42271)

    # |G_n| for n = 3..8
    COLLAPSED_COUNTS: Dict[int, int] = {3: 3, 4: 2, 5: 17, 6: 8, 7: 155, 8: 56}


__all__ = [
    "EnumerationConstants",
    "TopplingConstants",
    "OutputConstants",
    "ExitCodes",
    "ReferenceValues",
]
