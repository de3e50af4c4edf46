"""
Unit tests for error message and exit code mapping
"""

import pytest
from pydantic import ValidationError

from src.combinatorics.bijections import BijectionError
from src.combinatorics.perm_core import PermutationValidationError
from src.combinatorics.toppling import ToppleCapExceededError, TopplingError
from src.generators.base import EmitError
from src.graphs.orientations import EnumerationBudgetError
from src.utils.config import ParallelConfig
from src.utils.constants import ExitCodes
from src.utils.error_handlers import ERROR_MESSAGES, exit_code_for, get_friendly_message


def _validation_error() -> ValidationError:
    try:
        ParallelConfig(workers=0)
    except ValidationError as e:
        return e
    raise AssertionError("ParallelConfig accepted workers=0")


class TestGetFriendlyMessage:
    """Tests for user-facing messages"""

    def test_known_exception(self):
        message = get_friendly_message(PermutationValidationError("1,1 is not a permutation"))
        assert message == "Invalid permutation: 1,1 is not a permutation"

    def test_budget_exception(self):
        message = get_friendly_message(EnumerationBudgetError("21 edges"))
        assert message.startswith("Enumeration budget exceeded")

    def test_validation_error_uses_first_message(self):
        message = get_friendly_message(_validation_error())
        assert message.startswith("Please check your input: ")
        assert "greater than or equal to 1" in message

    def test_plain_value_error(self):
        assert get_friendly_message(ValueError("bad m")) == "Please check your input: bad m"

    def test_unknown_exception(self):
        assert get_friendly_message(RuntimeError("boom")) == "Something went wrong: boom"

    def test_every_category_has_a_detail_slot(self):
        for template in ERROR_MESSAGES.values():
            assert "{detail}" in template


class TestExitCodeFor:
    """Tests for exit code mapping"""

    @pytest.mark.parametrize("exc", [
        TopplingError("r out of range"),
        EmitError("no format"),
        ValueError("bad"),
        FileNotFoundError("graph.txt"),
    ])
    def test_usage_errors(self, exc):
        assert exit_code_for(exc) == ExitCodes.USAGE_ERROR

    def test_validation_error_is_usage(self):
        assert exit_code_for(_validation_error()) == ExitCodes.USAGE_ERROR

    def test_broken_invariant(self):
        assert exit_code_for(ToppleCapExceededError("cap")) == ExitCodes.VERIFICATION_FAILED

    def test_unexpected_exception(self):
        assert exit_code_for(RuntimeError("boom")) == ExitCodes.VERIFICATION_FAILED

class TestSubclassLookup:
    """Subclasses of mapped exceptions reuse their parent's category"""

    def test_subclass_message(self):
        class WrongSideError(BijectionError):
            pass

        message = get_friendly_message(WrongSideError("vertex 2 is a sink"))
        assert message == "Input outside the bijection's domain: vertex 2 is a sink"
        assert exit_code_for(WrongSideError("x")) == ExitCodes.USAGE_ERROR

    def test_subclass_of_broken_invariant(self):
        class PassCapExceededError(ToppleCapExceededError):
            pass

        assert exit_code_for(PassCapExceededError("cap")) == ExitCodes.VERIFICATION_FAILED
        assert get_friendly_message(PassCapExceededError("cap")).startswith("Toppling did not settle")
