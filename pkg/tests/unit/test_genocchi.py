"""
Unit tests for the Seidel triangle, Genocchi numbers, collapsed
permutations and Dellac configurations.
"""

import pytest
from pydantic import ValidationError

from src.combinatorics.genocchi import (
    GenocchiError,
    NotCollapsedError,
    collapsed_to_dellac,
    collapsed_to_excedance,
    dellac_to_collapsed,
    enumerate_collapsed,
    enumerate_dellac,
    excedance_to_collapsed,
    genocchi_first,
    genocchi_median,
    han_zeng_median,
    is_admissible,
    is_collapsed,
    is_dellac,
    normalized_median,
    render_dellac,
    seidel,
    swap_pair,
)
from src.combinatorics.perm_core import excedance_set, parse_permutation
from src.utils.constants import ReferenceValues
from src.utils.models import DellacConfiguration


def perm(text):
    return parse_permutation(text)


class TestSeidel:
    """Tests for the Seidel triangle and the sequences read from it."""

    def test_reference_rows(self):
        triangle = seidel(10)
        for n, row in ReferenceValues.SEIDEL_ROWS.items():
            assert triangle.rows[n - 1] == row

    def test_entry_outside_band_is_zero(self):
        triangle = seidel(5)
        assert triangle.entry(5, 1) == 0
        assert triangle.entry(5, 9) == 0
        assert triangle.entry(5, 4) == 3

    def test_entry_beyond_computed_rows(self):
        with pytest.raises(IndexError):
            seidel(3).entry(4, 2)

    def test_rows_must_be_positive(self):
        with pytest.raises(GenocchiError):
            seidel(0)

    def test_genocchi_sequences(self):
        size = len(ReferenceValues.GENOCCHI_FIRST)
        assert tuple(genocchi_first(i) for i in range(1, size + 1)) == ReferenceValues.GENOCCHI_FIRST
        assert tuple(genocchi_median(i) for i in range(1, size + 1)) == ReferenceValues.GENOCCHI_MEDIAN
        assert tuple(normalized_median(i) for i in range(size)) == ReferenceValues.GENOCCHI_NORMALIZED

    def test_median_identity(self):
        for n in range(0, 7):
            assert han_zeng_median(n) == genocchi_median(n + 1)

    def test_invalid_indices(self):
        with pytest.raises(GenocchiError):
            genocchi_first(0)
        with pytest.raises(GenocchiError):
            genocchi_median(0)
        with pytest.raises(GenocchiError):
            normalized_median(-1)


class TestCollapsed:
    """Tests for collapsed permutations and the excedance map."""

    def test_g3(self):
        members = [str(c.permutation) for c in enumerate_collapsed(3)]
        assert members == ["1,2,3", "1,3,2", "2,1,3"]

    def test_g4(self):
        members = [str(c.permutation) for c in enumerate_collapsed(4)]
        assert members == ["1,2,3,4", "1,3,2,4"]

    @pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
    def test_reference_counts(self, n):
        assert sum(1 for _ in enumerate_collapsed(n)) == ReferenceValues.COLLAPSED_COUNTS[n]

    def test_enumeration_matches_predicate(self):
        for c in enumerate_collapsed(6):
            assert is_collapsed(c.permutation)
        assert not is_collapsed(perm("231"))

    def test_n_too_small(self):
        with pytest.raises(GenocchiError):
            list(enumerate_collapsed(1))

    def test_excedance_map_examples(self):
        assert collapsed_to_excedance(perm("123")) == perm("312")
        assert collapsed_to_excedance(perm("132")) == perm("213")
        assert excedance_to_collapsed(perm("321")) == perm("213")

    def test_excedance_map_on_g5(self):
        for c in enumerate_collapsed(5):
            sigma = collapsed_to_excedance(c.permutation)
            assert excedance_set(sigma) == {1, 3}
            assert excedance_to_collapsed(sigma) == c.permutation

    def test_excedance_map_rejects_non_collapsed(self):
        with pytest.raises(NotCollapsedError):
            collapsed_to_excedance(perm("231"))

    def test_excedance_map_needs_odd_size(self):
        with pytest.raises(GenocchiError):
            collapsed_to_excedance(perm("1234"))

    def test_inverse_rejects_wrong_excedance_set(self):
        with pytest.raises(GenocchiError):
            excedance_to_collapsed(perm("123"))


class TestDellac:
    """Tests for Dellac configurations and the map from G_{2n}."""

    def test_order_one(self):
        configs = list(enumerate_dellac(1))
        assert [d.points for d in configs] == [((1, 1), (2, 1))]
        assert render_dellac(configs[0]) == "*\n*"

    def test_counts_are_normalized_medians(self):
        for order in range(1, 5):
            assert sum(1 for _ in enumerate_dellac(order)) == normalized_median(order)

    def test_enumerated_configurations_validate(self):
        for d in enumerate_dellac(3):
            assert is_dellac(d.points, 3)

    def test_model_rejects_column_outside_band(self):
        with pytest.raises(ValidationError):
            DellacConfiguration(order=2, points=((1, 1), (2, 2), (3, 2), (4, 1)))

    def test_is_dellac_false_for_missing_row(self):
        assert not is_dellac([(1, 1)], 1)

    def test_admissibility_and_swap(self):
        assert is_admissible(perm("1234"))
        assert not is_admissible(perm("1324"))
        assert swap_pair(perm("1234"), 1) == perm("1324")
        with pytest.raises(GenocchiError):
            swap_pair(perm("1234"), 2)

    def test_map_from_g4(self):
        d = collapsed_to_dellac(perm("1234"))
        assert d.order == 1
        assert d.points == ((1, 1), (2, 1))
        assert dellac_to_collapsed(d) == perm("1234")

    def test_round_trip_on_g6(self):
        admissible = [c.permutation for c in enumerate_collapsed(6) if is_admissible(c.permutation)]
        configs = [collapsed_to_dellac(p) for p in admissible]
        assert [dellac_to_collapsed(d) for d in configs] == admissible
        assert len(set(configs)) == len(configs)
        assert len(admissible) * 4 == ReferenceValues.COLLAPSED_COUNTS[6]

    def test_map_rejects_non_admissible(self):
        with pytest.raises(GenocchiError):
            collapsed_to_dellac(perm("1324"))

    def test_map_needs_even_size(self):
        with pytest.raises(GenocchiError):
            collapsed_to_dellac(perm("123"))
