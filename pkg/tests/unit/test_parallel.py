"""
Unit tests for partitioned scans
"""

import pytest

from src.utils.parallel import parallel_map, parallel_sum, split_range


def _square(x):
    return x * x


def _span(start, stop):
    return stop - start


class TestSplitRange:
    """Tests for chunking"""

    def test_even_split(self):
        assert split_range(8, 4) == [range(0, 2), range(2, 4), range(4, 6), range(6, 8)]

    def test_uneven_split_covers_everything(self):
        chunks = split_range(10, 3)
        assert [len(c) for c in chunks] == [4, 3, 3]
        assert [x for c in chunks for x in c] == list(range(10))

    def test_more_parts_than_items(self):
        assert split_range(2, 5) == [range(0, 1), range(1, 2)]

    def test_empty(self):
        assert split_range(0, 3) == [range(0, 0)]


class TestParallelMap:
    """Tests for in-process and joblib dispatch"""

    def test_in_process(self):
        assert parallel_map(_square, [(1,), (2,), (3,)]) == [1, 4, 9]

    @pytest.mark.parametrize("workers", [1, 2])
    def test_order_is_preserved(self, workers):
        tasks = [(i,) for i in range(6)]
        assert parallel_map(_square, tasks, workers) == [i * i for i in range(6)]

    def test_sum_over_chunks(self):
        tasks = [(r.start, r.stop) for r in split_range(100, 3)]
        assert parallel_sum(_span, tasks, workers=2) == 100
