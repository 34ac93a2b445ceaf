"""Centralized error codes, messages and exceptions for the rainbow toolkit.

Library code raises the exceptions defined here; the command-line layer maps
their error codes onto process exit codes.
"""

from enum import Enum
from typing import Optional


class ErrorCode(str, Enum):
    """Standard error codes for the library and CLI."""

    # General errors
    INTERNAL_ERROR = "INTERNAL_ERROR"
    INVALID_ARGUMENT = "INVALID_ARGUMENT"
    INVALID_CONFIG = "INVALID_CONFIG"

    # Geometry errors
    DEGENERATE_INPUT = "DEGENERATE_INPUT"
    NOT_HORTON = "NOT_HORTON"
    ADDRESS_TOO_DEEP = "ADDRESS_TOO_DEEP"

    # Resource errors
    BUDGET_EXCEEDED = "BUDGET_EXCEEDED"

    # Construction errors
    CONSTRUCTION_FAILED = "CONSTRUCTION_FAILED"

    # File errors
    FILE_NOT_FOUND = "FILE_NOT_FOUND"
    INVALID_FILE_FORMAT = "INVALID_FILE_FORMAT"

    # Output errors
    PLOT_ERROR = "PLOT_ERROR"

    # Verification outcome
    VERIFICATION_FAILED = "VERIFICATION_FAILED"


# User-friendly error messages
ERROR_MESSAGES = {
    ErrorCode.INTERNAL_ERROR: "An unexpected internal failure occurred.",
    ErrorCode.INVALID_ARGUMENT: "An argument is outside its permitted range.",
    ErrorCode.INVALID_CONFIG: "The configuration is invalid or incomplete.",
    ErrorCode.DEGENERATE_INPUT: "The point set is not in general position or its coloring is malformed.",
    ErrorCode.NOT_HORTON: "The point set does not satisfy the Horton set conditions.",
    ErrorCode.ADDRESS_TOO_DEEP: "The binary address selects an empty subset of the Horton set.",
    ErrorCode.BUDGET_EXCEEDED: "The enumeration would exceed the configured predicate budget.",
    ErrorCode.CONSTRUCTION_FAILED: "The point set construction could not be certified.",
    ErrorCode.FILE_NOT_FOUND: "The requested point set file was not found.",
    ErrorCode.INVALID_FILE_FORMAT: "The point set file could not be parsed or validated.",
    ErrorCode.PLOT_ERROR: "The point set could not be rendered as a plot.",
    ErrorCode.VERIFICATION_FAILED: "The verification found a counterexample or a violated bound.",
}

# Process exit codes used by the command-line interface
EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

_EXIT_CODES = {
    ErrorCode.VERIFICATION_FAILED: EXIT_VERIFICATION_FAILED,
    ErrorCode.BUDGET_EXCEEDED: EXIT_BUDGET,
}


def get_error_message(code: ErrorCode, custom_message: Optional[str] = None) -> str:
    """Get user-friendly error message for an error code.

    Args:
        code: The error code
        custom_message: Optional detail appended to the default message

    Returns:
        User-friendly error message
    """
    base_message = ERROR_MESSAGES.get(code, "An unexpected failure occurred.")

    if custom_message:
        return f"{base_message} {custom_message}"

    return base_message


def exit_code_for(code: ErrorCode) -> int:
    """Map an error code onto the CLI exit code discipline."""

    return _EXIT_CODES.get(code, EXIT_USAGE)


class RainbowError(Exception):
    """Base class for all errors raised by the rainbow toolkit."""

    code: ErrorCode = ErrorCode.INTERNAL_ERROR

    def __init__(self, detail: Optional[str] = None):
        self.detail = detail
        super().__init__(get_error_message(self.code, detail))


class InvalidArgumentError(RainbowError, ValueError):
    code = ErrorCode.INVALID_ARGUMENT


class DegenerateInputError(RainbowError, ValueError):
    """Raised for collinear triples, duplicate x-coordinates or bad colorings."""

    code = ErrorCode.DEGENERATE_INPUT


class NotHortonError(RainbowError, ValueError):
    code = ErrorCode.NOT_HORTON


class AddressError(RainbowError, ValueError):
    code = ErrorCode.ADDRESS_TOO_DEEP


class BudgetExceededError(RainbowError):
    """Raised before an enumeration whose predicate estimate exceeds the budget."""

    code = ErrorCode.BUDGET_EXCEEDED

    def __init__(self, estimate: int, budget: int):
        self.estimate = estimate
        self.budget = budget
        super().__init__(f"Estimated {estimate} predicate calls, budget is {budget}.")


class ConstructionError(RainbowError):
    code = ErrorCode.CONSTRUCTION_FAILED


class PointSetFormatError(RainbowError, ValueError):
    code = ErrorCode.INVALID_FILE_FORMAT


class PlotError(RainbowError):
    code = ErrorCode.PLOT_ERROR
