"""
Unit tests for permutation primitives and text forms.
"""

import pytest
from pydantic import ValidationError

from src.combinatorics.perm_core import (
    PermutationValidationError,
    all_permutations,
    canonical_cycles,
    excedance_set,
    format_cycles,
    format_permutation,
    from_cycles,
    hat,
    identity,
    inverse,
    make_permutation,
    parse_cycles,
    parse_permutation,
    to_cycles,
)
from src.utils.models import CycleDecomposition, Permutation


def perm(text: str) -> Permutation:
    return parse_permutation(text)


class TestPermutationModel:
    """Tests for the Permutation model."""

    def test_valid_word(self):
        """Should accept a bijection of 1..n."""
        p = Permutation(word=(3, 1, 4, 2))
        assert p.n == 4
        assert p(1) == 3
        assert str(p) == "3,1,4,2"

    def test_rejects_repeated_value(self):
        """Should reject words that are not permutations."""
        with pytest.raises(ValidationError):
            Permutation(word=(1, 1, 2))

    def test_rejects_empty_word(self):
        with pytest.raises(ValidationError):
            Permutation(word=())

    def test_is_frozen_and_hashable(self):
        """Permutations are used as set members in the verification suites."""
        assert len({perm("123"), perm("1,2,3"), perm("132")}) == 2

    def test_make_permutation_wraps_validation(self):
        with pytest.raises(PermutationValidationError):
            make_permutation([2, 3])


class TestStatistics:
    """Tests for excedance sets, inverse and reverse-complement."""

    def test_excedance_set_examples(self):
        assert excedance_set(perm("3142")) == {1, 3}
        assert excedance_set(perm("53241")) == {1, 2}
        assert excedance_set(identity(6)) == set()

    def test_inverse_examples(self):
        assert inverse(perm("3142")) == perm("2413")
        assert inverse(perm("53241")) == perm("53241")
        assert inverse(identity(4)) == identity(4)

    def test_hat_examples(self):
        assert hat(perm("3142")) == perm("3142")
        assert hat(perm("24135")) == perm("13524")
        assert hat(identity(5)) == identity(5)

    def test_involutions_on_s5(self):
        """hat and inverse are involutions on all of S_5."""
        for p in all_permutations(5):
            assert hat(hat(p)) == p
            assert inverse(inverse(p)) == p

    def test_last_position_never_an_excedance(self):
        for p in all_permutations(5):
            ex = excedance_set(p)
            assert 5 not in ex
            assert len(ex) <= 4

    def test_all_permutations_is_lexicographic(self):
        words = [p.word for p in all_permutations(3)]
        assert words == sorted(words)
        assert len(words) == 6


class TestCycles:
    """Tests for the canonical cycle decomposition."""

    def test_canonical_example(self):
        """396752481 decomposes as (8)(5)(47)(13629)."""
        c = to_cycles(perm("396752481"))
        assert c.cycles == ((8,), (5,), (4, 7), (1, 3, 6, 2, 9))
        assert format_cycles(c) == "(8)(5)(47)(13629)"

    def test_identity_cycles(self):
        assert to_cycles(identity(3)).cycles == ((3,), (2,), (1,))

    def test_round_trip_on_s5(self):
        for p in all_permutations(5):
            assert from_cycles(to_cycles(p)) == p

    def test_canonical_cycles_rotates_and_orders(self):
        c = canonical_cycles(9, [(3, 6, 2, 9, 1), (7, 4), (5,), (8,)])
        assert c.cycles == ((8,), (5,), (4, 7), (1, 3, 6, 2, 9))

    def test_rejects_non_canonical_order(self):
        with pytest.raises(ValidationError):
            CycleDecomposition(n=2, cycles=((1,), (2,)))

    def test_from_cycles_rejects_partial_cover(self):
        bad = CycleDecomposition.model_construct(n=3, cycles=((2,), (1,)))
        with pytest.raises(PermutationValidationError):
            from_cycles(bad)

    def test_wide_cycle_text_uses_spaces(self):
        p = make_permutation([2, 1, 3, 4, 5, 6, 7, 8, 9, 10])
        text = format_cycles(to_cycles(p))
        assert text.endswith("(1 2)")
        assert parse_cycles(text, 10) == to_cycles(p)


class TestTextForms:
    """Tests for permutation parsing."""

    def test_parse_comma_and_compact_forms(self):
        assert parse_permutation("3,1,4,2") == parse_permutation("3142")
        assert parse_permutation(" 3 1 4 2 ").word == (3, 1, 4, 2)

    def test_format_uses_comma_form(self):
        word = (10, 1, 2, 3, 4, 5, 6, 7, 8, 9)
        assert format_permutation(make_permutation((3, 1, 4, 2))) == "3,1,4,2"
        assert parse_permutation(format_permutation(make_permutation(word))).word == word

    def test_parse_rejects_garbage(self):
        with pytest.raises(PermutationValidationError):
            parse_permutation("3,x,1")

    def test_parse_rejects_empty(self):
        with pytest.raises(PermutationValidationError):
            parse_permutation("  ")

    def test_parse_rejects_non_bijection(self):
        with pytest.raises(PermutationValidationError):
            parse_permutation("1,3")

    def test_parse_cycles_accepts_any_rotation(self):
        assert parse_cycles("(13629)(47)(5)(8)", 9).cycles == ((8,), (5,), (4, 7), (1, 3, 6, 2, 9))
