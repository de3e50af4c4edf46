"""
Unit tests for the toppling engine.
"""

import pytest
from pydantic import ValidationError

from src.combinatorics.perm_core import all_permutations, hat, identity, parse_permutation
from src.combinatorics.toppling import (
    InvalidToppleError,
    TopplingError,
    count_r_toppleable,
    final_moves_respect_halves,
    first_chip_position_bound,
    is_r_toppleable,
    is_structurally_toppleable,
    is_toppleable,
    make_config,
    run_pass,
    run_toppling,
    symmetric_partner,
    topple_once,
    toppleable_permutations,
)
from src.utils.constants import ReferenceValues, TopplingConstants
from src.utils.models import ChipConfiguration


@pytest.fixture
def rho():
    return parse_permutation("3142")


@pytest.fixture
def sigma():
    return parse_permutation("25134")


class TestChipConfiguration:
    """Tests for configuration construction and validation."""

    def test_make_config_even(self, rho):
        c = make_config(rho, 2)
        assert str(c) == "_,4,(1,2),5,3,_"
        assert c.leftmost == -2 and c.rightmost == 3
        assert c.chips_at(0) == (1, 2)
        assert c.doubly_occupied() == [0]

    def test_make_config_odd(self, sigma):
        assert str(make_config(sigma, 2)) == "_,3,6,(1,2),4,5,_"

    def test_make_config_inserts_largest_chip(self):
        assert str(make_config(identity(2), 3)) == "_,(1,3),2,_"

    def test_r_out_of_range(self, rho):
        with pytest.raises(TopplingError):
            make_config(rho, 6)
        with pytest.raises(TopplingError):
            make_config(rho, 0)

    def test_rejects_three_chips_on_a_site(self):
        with pytest.raises(ValidationError):
            ChipConfiguration(n=2, sites=((), (1, 2, 3), (), ()))

    def test_rejects_adjacent_double_sites(self):
        with pytest.raises(ValidationError):
            ChipConfiguration(n=3, sites=((), (1, 2), (3, 4), (), ()))

    def test_rejects_missing_chip(self):
        with pytest.raises(ValidationError):
            ChipConfiguration(n=2, sites=((1,), (2,), (), ()))

    def test_as_mapping_uses_signed_positions(self, rho):
        mapping = make_config(rho, 2).as_mapping()
        assert list(mapping) == [-2, -1, 0, 1, 2, 3]
        assert mapping[1] == (5,)


class TestToppleOnce:
    """Tests for single topples."""

    def test_origin_topple(self, rho):
        c = topple_once(make_config(rho, 2), 0)
        assert c.chips_at(-1) == (1, 4)
        assert c.chips_at(1) == (2, 5)
        assert c.chips_at(0) == ()

    def test_single_chip_site_is_rejected(self, rho):
        with pytest.raises(InvalidToppleError):
            topple_once(make_config(rho, 2), 1)

    def test_chips_are_preserved(self, rho):
        c = topple_once(make_config(rho, 2), 0)
        assert sorted(x for site in c.sites for x in site) == [1, 2, 3, 4, 5]


class TestPasses:
    """Tests for the pass schedule."""

    def test_first_and_second_pass(self, rho):
        first = run_pass(make_config(rho, 2))
        assert str(first) == "1,_,(2,4),3,_,5"
        second = run_pass(first)
        assert str(second) == "1,2,3,_,4,5"

    def test_frozen_configuration_is_unchanged(self, rho):
        frozen = run_pass(run_pass(make_config(rho, 2)))
        assert run_pass(frozen) == frozen

    def test_three_passes_for_sigma(self, sigma):
        outcome = run_toppling(sigma, 2, trace=True)
        assert [str(c) for c in outcome.pass_trace] == [
            "1,_,3,(2,6),4,_,5",
            "1,2,_,(3,4),_,6,5",
            "1,2,3,_,4,6,5",
        ]
        assert outcome.pass_count == 3
        assert outcome.topple_count == 9

    def test_trace_is_opt_in(self, rho):
        assert run_toppling(rho, 2).pass_trace is None


class TestRunToppling:
    """Tests for full evolutions."""

    def test_rho_topples_to_identity(self, rho):
        outcome = run_toppling(rho, 2)
        assert outcome.result.word == (1, 2, 3, 4, 5)
        assert outcome.topple_count == 6
        assert outcome.pass_count == 2

    def test_sigma_result(self, sigma):
        assert run_toppling(sigma, 2).result.word == (1, 2, 3, 4, 6, 5)

    def test_non_toppleable_example(self):
        p = parse_permutation("13452")
        assert run_toppling(p, 3).result.word == (1, 3, 2, 4, 5, 6)
        assert not is_r_toppleable(p, 3)

    def test_identity_is_always_toppleable(self):
        for n in range(1, 8):
            assert is_toppleable(identity(n))

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_topple_count_is_schedule_free(self, n):
        """Every evolution performs the same number of topples."""
        expected = ((n + 1) // 2) ** 2 if n % 2 else (n // 2) * (n // 2 + 1)
        for p in all_permutations(n):
            assert run_toppling(p, 2).topple_count == expected

    def test_random_schedule_matches_pass_schedule(self):
        for p in all_permutations(4):
            for r in range(1, 6):
                reference = run_toppling(p, r).result
                for seed in range(5):
                    outcome = run_toppling(p, r, schedule=TopplingConstants.SCHEDULE_RANDOM, seed=seed)
                    assert outcome.result == reference
                    assert outcome.pass_count is None

    def test_unknown_schedule(self, rho):
        with pytest.raises(TopplingError):
            run_toppling(rho, 2, schedule="spiral")

    def test_pass_bound(self):
        for n in (4, 5):
            bound = (n + 1) // 2 if n % 2 else n // 2
            for p in all_permutations(n):
                for r in range(1, n + 2):
                    assert run_toppling(p, r).pass_count <= bound


class TestToppleability:
    """Tests for toppleability predicates and counts."""

    def test_is_r_toppleable_examples(self, rho, sigma):
        assert is_r_toppleable(rho, 2)
        assert not is_r_toppleable(sigma, 2)

    def test_toppleable_in_s3(self):
        assert [str(p) for p in toppleable_permutations(3)] == ["1,2,3", "1,3,2", "2,1,3"]

    def test_rho_is_not_toppleable(self, rho):
        assert not is_toppleable(rho)
        assert not is_structurally_toppleable(rho)

    def test_structural_examples(self):
        assert is_structurally_toppleable(parse_permutation("31524"))
        assert is_structurally_toppleable(parse_permutation("216435"))

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_structural_matches_simulation(self, n):
        r = n // 2 + 1
        for p in all_permutations(n):
            simulated = is_r_toppleable(p, r)
            assert is_structurally_toppleable(p) == simulated
            assert is_toppleable(p) == simulated

    def test_count_examples(self):
        assert count_r_toppleable(3, 1) == 4
        assert count_r_toppleable(5, 2) == 38
        assert count_r_toppleable(5, 5) == 38

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_table_rows(self, n):
        row = [count_r_toppleable(n, r) for r in range(1, n + 2)]
        assert row == ReferenceValues.TOPPLEABLE_BY_R[n]

    def test_count_with_workers(self):
        assert count_r_toppleable(5, 3, workers=2) == 31

    def test_symmetry_for_odd_n(self):
        for p in all_permutations(5):
            for r in range(1, 7):
                partner, partner_r = symmetric_partner(p, r)
                assert partner == hat(p)
                assert is_r_toppleable(p, r) == is_r_toppleable(partner, partner_r)

    def test_first_chip_bound_is_necessary(self):
        for n in range(2, 7):
            for p in toppleable_permutations(n):
                assert first_chip_position_bound(p)

    def test_final_moves_respect_halves(self):
        for n in (4, 5):
            for p in all_permutations(n):
                for r in range(1, n + 2):
                    outcome = run_toppling(p, r)
                    if outcome.result.word == tuple(range(1, n + 2)):
                        assert final_moves_respect_halves(outcome, n)


@pytest.mark.slow
class TestExhaustive:
    """Full Table 1 rows for the larger sizes."""

    @pytest.mark.parametrize("n", [7, 8])
    def test_table_rows(self, n):
        row = [count_r_toppleable(n, r) for r in range(1, n + 2)]
        assert row == ReferenceValues.TOPPLEABLE_BY_R[n]
