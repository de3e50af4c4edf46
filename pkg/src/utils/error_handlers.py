"""
Error handlers for the command-line front end.

Turn library exceptions into short messages for stderr and map them onto
process exit codes. Full details go to the log.
"""
from typing import Optional

from pydantic import ValidationError

from src.utils.constants import ExitCodes
from src.utils.logger import logger

# User-facing messages, keyed by exception category
ERROR_MESSAGES = {
    "permutation": "Invalid permutation: {detail}",
    "toppling": "Toppling failed: {detail}",
    "topple_cap": "Toppling did not settle within its iteration cap: {detail}",
    "excedance": "Invalid excedance class: {detail}",
    "genocchi": "Invalid Genocchi input: {detail}",
    "graph": "Invalid graph input: {detail}",
    "budget": "Enumeration budget exceeded: {detail}",
    "formula": "Formula not applicable: {detail}",
    "bijection": "Input outside the bijection's domain: {detail}",
    "extremal": "Invalid slide or scan: {detail}",
    "emit": "Cannot render output: {detail}",
    "table": "Invalid table range: {detail}",
    "verification": "Invalid verification request: {detail}",
    "validation": "Please check your input: {detail}",
    "file": "Cannot read input file: {detail}",
    "server_error": "Something went wrong: {detail}",
}

# Exceptions that signal a broken internal invariant rather than bad input
INTERNAL_ERRORS = {"ToppleCapExceededError"}

_CATEGORY_BY_NAME = {
    "PermutationError": "permutation",
    "PermutationValidationError": "permutation",
    "TopplingError": "toppling",
    "InvalidToppleError": "toppling",
    "ToppleCapExceededError": "topple_cap",
    "ExcedanceError": "excedance",
    "GenocchiError": "genocchi",
    "NotCollapsedError": "genocchi",
    "GraphError": "graph",
    "EdgeNotFoundError": "graph",
    "EnumerationBudgetError": "budget",
    "FormulaError": "formula",
    "BijectionError": "bijection",
    "ExtremalError": "extremal",
    "EmitError": "emit",
    "TableServiceError": "table",
    "VerificationError": "verification",
    "FileNotFoundError": "file",
    "IsADirectoryError": "file",
    "PermissionError": "file",
}


def _short_detail(exception: Exception) -> str:
    if isinstance(exception, ValidationError):
        errors = exception.errors()
        if errors:
            return errors[0]["msg"]
    return str(exception)


def _category_for(exception: Exception) -> Optional[str]:
    """First mapped category along the exception's MRO"""
    if isinstance(exception, ValidationError):
        return "validation"
    for klass in type(exception).__mro__:
        category = _CATEGORY_BY_NAME.get(klass.__name__)
        if category:
            return category
    if isinstance(exception, ValueError):
        return "validation"
    return None


def get_friendly_message(exception: Exception) -> str:
    """
    Convert exception to a one-line message.

    Args:
        exception: The exception that was raised

    Returns:
        Message naming the failure category and its cause
    """
    category = _category_for(exception) or "server_error"
    return ERROR_MESSAGES[category].format(detail=_short_detail(exception))


def exit_code_for(exception: Exception) -> int:
    """Usage and validation errors exit 2; broken invariants exit 1"""
    if any(klass.__name__ in INTERNAL_ERRORS for klass in type(exception).__mro__):
        logger.error(f"Internal invariant violated: {exception}")
        return ExitCodes.VERIFICATION_FAILED
    if _category_for(exception) is not None:
        return ExitCodes.USAGE_ERROR
    logger.exception(exception)
    return ExitCodes.VERIFICATION_FAILED
