"""
Error types for the singularity toolkit.

Every error a command can surface derives from SingularityToolkitError and
carries the process exit code the CLI should return for it.
"""
from enum import IntEnum
from typing import Optional


class ExitCode(IntEnum):
    SUCCESS = 0
    SCAN_VIOLATION = 1
    INPUT_ERROR = 2
    NOT_SAITO_BASIS = 3
    NON_ISOLATED = 4


class SingularityToolkitError(Exception):
    """Base class for all toolkit errors"""
    exit_code = ExitCode.INPUT_ERROR


class PolynomialParseError(SingularityToolkitError, ValueError):
    """Raised when a polynomial expression does not match the grammar"""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class InvalidExponentsError(SingularityToolkitError, ValueError):
    """Raised when a characteristic exponent list violates a validity rule"""

    def __init__(self, rule: str, beta=None):
        detail = f" in {list(beta)}" if beta is not None else ""
        super().__init__(f"invalid characteristic exponents: {rule}{detail}")
        self.rule = rule


class CurveFileError(SingularityToolkitError, ValueError):
    """Raised when a curve file cannot be read or is incomplete"""


class NotACurveGermError(SingularityToolkitError, ValueError):
    """The polynomial is zero or does not vanish at the origin"""


class NotSingleLineError(SingularityToolkitError):
    """Tangent cone is not a power of a single line y + eps*x with rational eps"""

    def __init__(self, message: str, vertical: bool = False):
        super().__init__(message)
        self.vertical = vertical


class NotSaitoBasisError(SingularityToolkitError):
    exit_code = ExitCode.NOT_SAITO_BASIS


class NonIsolatedSingularityError(SingularityToolkitError):
    exit_code = ExitCode.NON_ISOLATED

    def __init__(self, message: str, common_factor: Optional[str] = None):
        super().__init__(message)
        self.common_factor = common_factor


class NotDivisibleError(SingularityToolkitError, ArithmeticError):
    """Exact polynomial division left a remainder"""


class NotInvariantError(SingularityToolkitError):
    """The curve is not invariant for the 1-form (A*f_y - B*f_x not divisible by f)"""
    exit_code = ExitCode.NOT_SAITO_BASIS


class ColengthCapExceededError(SingularityToolkitError):
    exit_code = ExitCode.NON_ISOLATED


class InternalConsistencyError(SingularityToolkitError, AssertionError):
    """Two independent evaluations of the same quantity disagree"""
    exit_code = ExitCode.SCAN_VIOLATION
