"""
Unit tests for closed-form orientation counts and Turán numbers.
"""

import pytest

from src.graphs.formulas import (
    FormulaError,
    count_ao_multipartite,
    count_ao_unlabeled,
    count_auso_multipartite,
    count_no_sink_unlabeled,
    count_R_bipartite,
    delta_power_entry,
    exc_class_sizes,
    multinomial,
    stanley_recurrence_check,
    surjection_count,
    turan_parts,
    turan_u,
)
from src.graphs.orientations import count_ao_brute, count_auso_brute
from src.utils.constants import ReferenceValues
from src.utils.models import CompleteMultipartiteGraph


class TestMultipartite:
    """AO and fixed-sink AUSO counts of complete multipartite graphs."""

    def test_known_values(self):
        assert count_ao_multipartite((1, 1)) == 2
        assert count_ao_multipartite((1, 1, 1)) == 6
        assert count_ao_multipartite((2, 2)) == 14
        assert count_ao_multipartite((2, 3)) == 46

    def test_auso_known_values(self):
        assert count_auso_multipartite((1, 1, 1)) == 2
        assert count_auso_multipartite((2, 2)) == 3
        assert count_auso_multipartite((3, 3)) == 31

    @pytest.mark.parametrize("parts", [(1, 2), (2, 2, 1), (3, 2), (1, 1, 3), (2, 1, 1, 1)])
    def test_against_brute_force(self, parts):
        g = CompleteMultipartiteGraph(part_sizes=parts).to_graph()
        assert count_ao_multipartite(parts) == count_ao_brute(g)
        assert count_auso_multipartite(parts) == count_auso_brute(g, 1)

    def test_part_order_does_not_matter_for_ao(self):
        assert count_ao_multipartite((3, 1, 2)) == count_ao_multipartite((2, 1, 3))

    def test_single_part_is_rejected(self):
        with pytest.raises(FormulaError):
            count_ao_multipartite((3,))

    def test_unlabeled_variants(self):
        assert count_ao_unlabeled((2, 1, 1)) == 18
        assert count_no_sink_unlabeled((2, 1, 1)) == 8

    def test_multinomial(self):
        assert multinomial(4, (2, 1, 1)) == 12
        with pytest.raises(FormulaError):
            multinomial(4, (2, 1))

    def test_surjection_count(self):
        assert surjection_count(3, 2) == 6
        assert surjection_count(2, 3) == 0


class TestBipartiteNoLeftSink:
    """|R(m, n)| and the three expressions for excedance class sizes."""

    def test_known_values(self):
        assert count_R_bipartite(1, 1) == 1
        assert count_R_bipartite(2, 3) == 31
        assert count_R_bipartite(3, 4) == 675

    def test_invalid_arguments(self):
        with pytest.raises(FormulaError):
            count_R_bipartite(1, 0)

    def test_three_expressions_agree(self):
        for m in range(0, 5):
            for n_rest in range(1, 5):
                assert len(set(exc_class_sizes(m, n_rest))) == 1


class TestStanleyRecurrence:
    """Alternating recurrence over part sizes."""

    @pytest.mark.parametrize("parts", [(1, 1), (2, 3), (1, 1, 1), (3, 2, 2), (1, 2, 3, 1)])
    def test_holds(self, parts):
        assert stanley_recurrence_check(parts)


class TestTuran:
    """Fixed-sink AUSO counts of Turán graphs."""

    def test_parts(self):
        assert turan_parts(7, 3) == (3, 2, 2)
        assert turan_parts(4, 4) == (1, 1, 1, 1)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_reference_rows(self, n):
        assert [turan_u(n, r) for r in range(1, n + 1)] == ReferenceValues.TURAN_AUSO[n]

    def test_both_paths_agree(self):
        for n in range(2, 8):
            for r in range((n + 1) // 2, n + 1):
                assert turan_u(n, r, "formula") == turan_u(n, r, "multipartite")

    def test_complete_graph(self):
        assert turan_u(5, 5) == 24

    def test_formula_out_of_range(self):
        with pytest.raises(FormulaError):
            turan_u(7, 2, "formula")

    def test_r_above_n(self):
        with pytest.raises(FormulaError):
            turan_u(3, 4)

    def test_unknown_method(self):
        with pytest.raises(FormulaError):
            turan_u(4, 2, "guess")

    def test_delta_powers(self):
        for k in range(0, 4):
            for r in range(max(k, 1), max(k, 1) + 3):
                assert delta_power_entry(k, r + k) == turan_u(r + k, r)

    def test_delta_power_range(self):
        with pytest.raises(FormulaError):
            delta_power_entry(2, 2)
