"""
Domain exceptions for pcurv.

Every error raised by the library derives from DomainException. Two
families matter to callers: InputError (malformed text, bad flags, unknown
names; exit code 2 on the command line) and MathDomainError (well-formed
input outside the domain of an operation; exit code 3).
"""

from typing import Any, Dict, Iterable, Optional


class DomainException(Exception):
    """Base domain exception."""

    exit_code: int = 1

    def __init__(
        self,
        message: str,
        details: Optional[Dict[str, Any]] = None,
        error_code: Optional[str] = None
    ) -> None:
        """Initialize domain exception."""
        super().__init__(message)
        self.message = message
        self.details = details or {}
        self.error_code = error_code or self.__class__.__name__

    def to_dict(self) -> Dict[str, Any]:
        """Convert exception to dictionary representation."""
        return {
            "error_type": self.__class__.__name__,
            "error_code": self.error_code,
            "message": self.message,
            "details": self.details
        }


# --- input errors --------------------------------------------------------


class InputError(DomainException):
    """Malformed user input."""

    exit_code = 2


class ParseError(InputError):
    """Expression text does not conform to the grammar."""

    def __init__(
        self,
        message: str,
        text: Optional[str] = None,
        position: Optional[int] = None,
        expected: Optional[Iterable[str]] = None
    ) -> None:
        """Initialize parse error."""
        details: Dict[str, Any] = {}
        if text is not None:
            details["text"] = text[:200]
        if position is not None:
            details["position"] = position
        if expected:
            details["expected"] = sorted(set(expected))
        super().__init__(message, details)
        self.position = position


class NonpolynomialExponent(ParseError):
    """Exponent is not a nonnegative integer literal."""


class DxInDenominator(ParseError):
    """Division by an expression that contains Dx."""


class ValidationError(InputError):
    """Invalid flag or parameter value."""

    def __init__(self, message: str, field: Optional[str] = None, value: Any = None) -> None:
        """Initialize validation error."""
        details = {}
        if field:
            details["field"] = field
        if value is not None:
            details["value"] = str(value)
        super().__init__(message, details)


class UnknownCommand(InputError):
    """Command name not handled by the dispatcher."""

    def __init__(self, command: str, known: Iterable[str]) -> None:
        """Initialize unknown command error."""
        super().__init__(
            f"Unknown command: {command}",
            {"command": command, "known": sorted(known)}
        )


class CatalogError(InputError):
    """Operator catalog lookup or loading failed."""

    def __init__(self, message: str, name: Optional[str] = None, path: Optional[str] = None) -> None:
        """Initialize catalog error."""
        details = {}
        if name:
            details["name"] = name
        if path:
            details["path"] = path
        super().__init__(message, details)


class ConfigurationError(InputError):
    """Configuration error."""

    def __init__(
        self,
        message: str,
        config_key: Optional[str] = None,
        config_value: Optional[Any] = None
    ) -> None:
        """Initialize configuration error."""
        details = {}
        if config_key:
            details["config_key"] = config_key
        if config_value is not None:
            details["config_value"] = str(config_value)
        super().__init__(message, details)


# --- mathematical domain errors ------------------------------------------


class MathDomainError(DomainException):
    """Operation undefined for the given (well-formed) input."""

    exit_code = 3


class BadReduction(MathDomainError):
    """Reduction modulo p is undefined or drops the order."""

    def __init__(
        self,
        message: str,
        prime: Optional[int] = None,
        coefficient_index: Optional[int] = None,
        leading_degenerate: bool = False
    ) -> None:
        """Initialize bad reduction error."""
        details: Dict[str, Any] = {"leading_degenerate": leading_degenerate}
        if prime is not None:
            details["prime"] = prime
        if coefficient_index is not None:
            details["coefficient_index"] = coefficient_index
        super().__init__(message, details)
        self.prime = prime
        self.coefficient_index = coefficient_index
        self.leading_degenerate = leading_degenerate


class PoleEvaluation(MathDomainError):
    """Evaluation of a rational function at one of its poles."""

    def __init__(self, point: Any) -> None:
        """Initialize pole evaluation error."""
        super().__init__(f"Evaluation at a pole: {point}", {"point": str(point)})


class InseparableInput(MathDomainError):
    """Squarefree decomposition hits a multiplicity divisible by the characteristic."""

    def __init__(self, polynomial: str, characteristic: int) -> None:
        """Initialize inseparable input error."""
        super().__init__(
            "Multiplicity divisible by the characteristic",
            {"polynomial": polynomial[:200], "characteristic": characteristic}
        )


class DivisionByZeroOperator(MathDomainError):
    """Euclidean division by the zero operator."""

    def __init__(self) -> None:
        """Initialize division error."""
        super().__init__("Division by the zero operator")


class PointError(MathDomainError):
    """An operation was asked to work at an unsuitable point."""

    def __init__(self, message: str, point: Any = None) -> None:
        """Initialize point error."""
        details = {}
        if point is not None:
            details["point"] = str(point)
        super().__init__(message, details)


class PoleAtSamplePoint(PointError):
    """CRT sample point is a pole of the companion matrix."""


class PoleAtBasePoint(PointError):
    """Base point of a fundamental matrix is a pole."""


class PoleAtOrigin(PointError):
    """Series expansion at 0 requested for a function with a pole at 0."""


class NotOrdinaryPoint(PointError):
    """0 is a singular point of the monic operator."""


class IrregularSingularPoint(PointError):
    """0 fails the Fuchs criterion."""


class NotEnoughSamplePoints(MathDomainError):
    """The prime field has too few regular points for the CRT bound."""

    def __init__(self, needed: int, available: int, prime: int) -> None:
        """Initialize sample point shortage error."""
        super().__init__(
            f"Need {needed} regular sample points in F_{prime}, only {available} available",
            {"needed": needed, "available": available, "prime": prime}
        )


class NonzeroPCurvature(MathDomainError):
    """Operation requires a vanishing p-curvature."""

    def __init__(self, prime: int) -> None:
        """Initialize nonzero p-curvature error."""
        super().__init__(f"p-curvature is nonzero at p = {prime}", {"prime": prime})


class Reducible(MathDomainError):
    """Hypergeometric parameters with an integral upper-lower difference."""

    def __init__(self, upper: Any, lower: Any) -> None:
        """Initialize reducible parameters error."""
        super().__init__(
            f"Parameters {upper} and {lower} differ by an integer",
            {"upper": str(upper), "lower": str(lower)}
        )


class EmptyParams(MathDomainError):
    """Hypergeometric parameter list is empty."""

    def __init__(self) -> None:
        """Initialize empty parameters error."""
        super().__init__("Upper parameter list is empty")


class TruncationTooSmall(MathDomainError):
    """Not enough terms to reach a decision."""

    def __init__(self, truncation: int, needed: int) -> None:
        """Initialize truncation error."""
        super().__init__(
            f"Truncation {truncation} too small, need at least {needed}",
            {"truncation": truncation, "needed": needed}
        )


class UnsupportedOrder(MathDomainError):
    """Operator order beyond what an operation supports."""

    def __init__(self, order: int, maximum: int) -> None:
        """Initialize unsupported order error."""
        super().__init__(
            f"Order {order} exceeds the supported maximum {maximum}",
            {"order": order, "maximum": maximum}
        )


class SingularIndex(MathDomainError):
    """Leading recurrence coefficient vanishes at an index being unrolled."""

    def __init__(self, index: int) -> None:
        """Initialize singular index error."""
        super().__init__(f"Leading coefficient vanishes at k = {index}", {"index": index})
        self.index = index


class LowerParameterNonpositiveInteger(MathDomainError):
    """Hypergeometric lower parameter in {0, -1, -2, ...}."""

    def __init__(self, value: Any) -> None:
        """Initialize lower parameter error."""
        super().__init__(
            f"Lower parameter {value} is a nonpositive integer", {"value": str(value)}
        )


class NotASimpleRoot(MathDomainError):
    """Hensel lifting needs P(0, y0) = 0 and dP/dy(0, y0) != 0."""

    def __init__(self, root: int, prime: int, reason: str) -> None:
        """Initialize simple root error."""
        super().__init__(
            f"{root} is not a simple root mod {prime}: {reason}",
            {"root": root, "prime": prime, "reason": reason}
        )


class NoExpansionAtOrigin(MathDomainError):
    """Rational function denominator vanishes at the origin."""

    def __init__(self) -> None:
        """Initialize expansion error."""
        super().__init__("Denominator has zero constant term")


def handle_exception(
    exception: Exception,
    context: Optional[str] = None,
    fallback_message: str = "An unexpected error occurred"
) -> DomainException:
    """
    Convert any exception to a DomainException.

    Args:
        exception: The original exception
        context: Context where the exception occurred
        fallback_message: Fallback message if exception has no message

    Returns:
        DomainException instance
    """
    if isinstance(exception, DomainException):
        return exception

    message = str(exception) or fallback_message
    if context:
        message = f"{context}: {message}"

    details = {
        "original_exception": exception.__class__.__name__,
        "original_message": str(exception)
    }

    if context:
        details["context"] = context

    return DomainException(message, details=details)


def exit_code_for(exception: Exception) -> int:
    """Map an exception to the process exit code."""
    if isinstance(exception, DomainException):
        return exception.exit_code
    return 1
