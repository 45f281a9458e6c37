# linkhom_core/errors.py
"""Exception hierarchy.

Every error carries the process exit code the CLI reports for it. Input
problems exit 1, violated arithmetic conventions exit 3 and disagreements
between the oracle and the algorithm exit 4.
"""

from .constants import EXIT_CONVENTION, EXIT_INVALID_INPUT, EXIT_MISMATCH


class LinkHomologyError(ValueError):
    """Base class for all library errors."""
    exit_code = EXIT_INVALID_INPUT


# ----- Invalid input -----

class InvalidWeightsError(LinkHomologyError):
    """Raw weights do not form a valid weight vector."""


class NonPositiveWeightError(InvalidWeightsError):
    pass


class NonPrimitiveError(InvalidWeightsError):
    pass


class TooFewWeightsError(InvalidWeightsError):
    pass


class InvalidDegreeError(LinkHomologyError):
    pass


class WeightExceedsDegreeError(LinkHomologyError):
    pass


class WrongVariantError(LinkHomologyError):
    pass


class CapExceededError(LinkHomologyError):
    """Oracle input is larger than the configured Milnor-number cap."""


class SubsetLimitError(LinkHomologyError):
    """Too many variables for a full subset table."""


class UnsupportedLinkError(LinkHomologyError):
    pass


class CatalogParseError(LinkHomologyError):
    """A single catalog row could not be parsed."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.reason = message


class EmptyInputError(LinkHomologyError):
    pass


class UnknownFormatError(LinkHomologyError):
    pass


# ----- Convention violations -----

class InexactDivisionError(LinkHomologyError):
    exit_code = EXIT_CONVENTION


class NonIntegerBettiError(LinkHomologyError):
    exit_code = EXIT_CONVENTION


# ----- Oracle -----

class OracleMismatchError(LinkHomologyError):
    exit_code = EXIT_MISMATCH
