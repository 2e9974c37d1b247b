"""Exception hierarchy shared across the toolkit.

The CLI maps these onto exit codes: usage/config problems exit 1, data
integrity problems exit 2, numeric failures exit 3.
"""


class DigitbenchError(Exception):
    """Base class for all toolkit errors."""


class DimensionError(DigitbenchError, ValueError):
    """Operand shapes are incompatible with the requested operation."""


class InvalidArgumentError(DigitbenchError, ValueError):
    """A value argument is outside its documented domain."""


class ConfigError(DigitbenchError, ValueError):
    """A configuration object is internally inconsistent."""


class UsageError(DigitbenchError):
    """The API or CLI was driven in an unsupported way."""


class NumericError(DigitbenchError, ArithmeticError):
    """A non-finite value appeared where the contract forbids one."""


class DataError(DigitbenchError, ValueError):
    """Decoded data violates its documented invariants (e.g. label > 9)."""


class FormatError(DigitbenchError, ValueError):
    """A byte stream does not match the expected container format."""


class TruncationError(FormatError):
    """A byte stream ended before its declared payload was complete."""

    def __init__(self, expected: int, actual: int, what: str = "payload"):
        self.expected = expected
        self.actual = actual
        super().__init__(f"truncated {what}: expected {expected} bytes, got {actual}")


class IntegrityError(DigitbenchError):
    """Stored bytes fail a checksum or length check."""


class UndefinedMetricError(DigitbenchError, ZeroDivisionError):
    """A metric was requested for an empty evaluation."""
