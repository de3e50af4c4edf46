"""
Partitioned scans over joblib workers
"""
from typing import Callable, List, Sequence, TypeVar

from joblib import Parallel, delayed

from src.utils.logger import logger

T = TypeVar("T")


def split_range(total: int, parts: int) -> List[range]:
    """Split range(total) into at most `parts` contiguous chunks"""
    parts = max(1, min(parts, total)) if total else 1
    step, extra = divmod(total, parts)
    chunks = []
    start = 0
    for i in range(parts):
        stop = start + step + (1 if i < extra else 0)
        chunks.append(range(start, stop))
        start = stop
    return chunks


def parallel_map(func: Callable[..., T], tasks: Sequence[tuple], workers: int = 1) -> List[T]:
    """Apply func(*task) to each task, preserving task order

    Args:
        func: Module-level callable (must be picklable for workers > 1)
        tasks: Argument tuples
        workers: Number of joblib workers; 1 runs in-process

    Returns:
        Results in the order of `tasks`
    """
    if workers <= 1 or len(tasks) <= 1:
        return [func(*task) for task in tasks]

    logger.debug(f"Dispatching {len(tasks)} tasks to {workers} workers")
    return Parallel(n_jobs=workers)(delayed(func)(*task) for task in tasks)


def parallel_sum(func: Callable[..., int], tasks: Sequence[tuple], workers: int = 1) -> int:
    """Sum integer results of func over tasks"""
    return sum(parallel_map(func, tasks, workers))

