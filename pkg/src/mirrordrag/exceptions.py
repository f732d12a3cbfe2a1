"""Custom exceptions for mirror-drag."""

from __future__ import annotations

from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from .models import VerifyReport


class MirrorDragError(Exception):
    """Base exception for all mirror-drag errors."""

    pass


class UsageError(MirrorDragError):
    """Exception raised when an argument is outside its valid domain."""

    def __init__(self, parameter: str, value: Any = None, message: str | None = None) -> None:  # noqa: ANN401
        """Initialize the exception.

        Args:
            parameter: Name of the offending parameter
            value: The rejected value
            message: Additional error message

        """
        self.parameter = parameter
        self.value = value
        msg = f"Invalid value for {parameter}: {value!r}"
        if message:
            msg = f"{msg} - {message}"
        super().__init__(msg)


class BetaRangeError(UsageError):
    """Exception raised when a velocity fraction is not a finite value within ±β_max."""

    def __init__(self, value: float, beta_max: float) -> None:
        """Initialize the exception.

        Args:
            value: The rejected velocity fraction
            beta_max: Largest admissible magnitude

        """
        self.beta_max = beta_max
        super().__init__("beta", value, f"|beta| must not exceed {beta_max!r}")


class NumericalError(MirrorDragError):
    """Exception raised when a computation produces a non-finite or unusable result."""

    def __init__(self, operation: str, message: str | None = None) -> None:
        """Initialize the exception.

        Args:
            operation: The computation that failed
            message: Additional error message

        """
        self.operation = operation
        msg = f"Numerical failure in {operation}"
        if message:
            msg = f"{msg} - {message}"
        super().__init__(msg)


class QuadratureError(NumericalError):
    """Exception raised when an integral does not converge within its budget."""

    def __init__(self, value: float, error_estimate: float, evaluations: int, message: str | None = None) -> None:
        """Initialize the exception.

        Args:
            value: Best estimate reached before giving up
            error_estimate: Error estimate attached to that value
            evaluations: Number of integrand evaluations spent
            message: Additional error message

        """
        self.value = value
        self.error_estimate = error_estimate
        self.evaluations = evaluations
        msg = f"best estimate {value!r} +/- {error_estimate!r} after {evaluations} evaluations"
        if message:
            msg = f"{message} ({msg})"
        super().__init__("quadrature", msg)


class VerificationError(MirrorDragError):
    """Exception raised when a verification suite reports failed checks."""

    def __init__(self, report: VerifyReport) -> None:
        """Initialize the exception.

        Args:
            report: The report containing the failed checks

        """
        self.report = report
        failed = [check.name for check in report.checks if not check.passed]
        super().__init__(f"Verification suite {report.suite} failed {len(failed)} check(s): {', '.join(failed)}")
