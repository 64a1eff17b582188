#!/usr/bin/env python3
"""
Custom exception hierarchy for dmr_graphs.

Every failure raised by the package derives from DmrGraphsError, which carries
a human-readable message, the original exception (if any) and a context dict
that is rendered into the string form of the error.
"""

from typing import Any, Dict, Optional, Sequence
import traceback


class DmrGraphsError(Exception):
    """Base exception for all dmr_graphs errors."""

    def __init__(
        self,
        message: str,
        original_error: Optional[Exception] = None,
        context: Optional[Dict[str, Any]] = None
    ):
        """
        Initialize base error.

        Args:
            message: Human-readable error message
            original_error: The original exception that caused this error
            context: Additional context information
        """
        super().__init__(message)
        self.message = message
        self.original_error = original_error
        self.context = context or {}

    def __str__(self) -> str:
        """Return string representation with context."""
        base_msg = self.message
        if self.context:
            context_str = ", ".join(f"{k}={v}" for k, v in self.context.items())
            base_msg += f" (Context: {context_str})"
        return base_msg

    def get_detailed_message(self) -> str:
        """Get detailed error message including original error if available."""
        msg = str(self)
        if self.original_error:
            msg += f"\nCaused by: {type(self.original_error).__name__}: {self.original_error}"
        return msg


class ConfigurationError(DmrGraphsError):
    """Exception raised for errors in configuration settings."""

    def __init__(
        self,
        message: str,
        config_key: Optional[str] = None,
        config_file: Optional[str] = None,
        original_error: Optional[Exception] = None
    ):
        """
        Initialize configuration error.

        Args:
            message: Error description
            config_key: The configuration key that caused the issue
            config_file: Path to the configuration file
            original_error: Original exception
        """
        context = {}
        if config_key:
            context["config_key"] = config_key
        if config_file:
            context["config_file"] = config_file

        super().__init__(message, original_error, context)
        self.config_key = config_key
        self.config_file = config_file


class GraphFormatError(DmrGraphsError):
    """Raised when an edge list or graph6 string cannot be parsed."""

    def __init__(
        self,
        message: str,
        fmt: Optional[str] = None,
        line_number: Optional[int] = None,
        token: Optional[str] = None,
        original_error: Optional[Exception] = None
    ):
        """
        Initialize graph format error.

        Args:
            message: Error description
            fmt: Input format ('edges' or 'graph6')
            line_number: 1-based line number of the offending line
            token: The offending token or byte
            original_error: Original exception
        """
        context = {}
        if fmt:
            context["format"] = fmt
        if line_number is not None:
            context["line"] = line_number
        if token is not None:
            context["token"] = repr(token)

        super().__init__(message, original_error, context)
        self.fmt = fmt
        self.line_number = line_number
        self.token = token


class GraphValidationError(DmrGraphsError):
    """Raised when a graph or partition violates a structural requirement."""

    def __init__(
        self,
        message: str,
        field_name: Optional[str] = None,
        expected: Optional[str] = None,
        actual_value: Optional[Any] = None,
        original_error: Optional[Exception] = None
    ):
        """
        Initialize graph validation error.

        Args:
            message: Error description
            field_name: Name of the field that failed validation
            expected: What was expected
            actual_value: The actual value that failed validation
            original_error: Original exception
        """
        context = {}
        if field_name:
            context["field_name"] = field_name
        if expected:
            context["expected"] = expected
        if actual_value is not None:
            context["actual_value"] = str(actual_value)

        super().__init__(message, original_error, context)
        self.field_name = field_name
        self.expected = expected
        self.actual_value = actual_value


class EccentricityError(GraphValidationError):
    """Raised when a vertex does not reach every distance up to the diameter."""

    def __init__(self, vertex: int, eccentricity: int, diameter: int):
        super().__init__(
            "vertex eccentricity below diameter",
            field_name="eccentricity",
            expected=f"{diameter}",
            actual_value=eccentricity,
        )
        self.context["vertex"] = vertex
        self.vertex = vertex
        self.eccentricity = eccentricity
        self.diameter = diameter


class CatalogError(DmrGraphsError):
    """Raised for unknown catalog names or bad catalog parameters."""

    def __init__(self, message: str, name: Optional[str] = None, original_error: Optional[Exception] = None):
        context = {"name": name} if name else {}
        super().__init__(message, original_error, context)
        self.name = name


class DimensionMismatchError(DmrGraphsError):
    """Raised when matrix or polynomial operands do not conform."""

    def __init__(
        self,
        message: str,
        operation: Optional[str] = None,
        left_shape: Optional[Sequence[int]] = None,
        right_shape: Optional[Sequence[int]] = None
    ):
        """
        Initialize dimension mismatch error.

        Args:
            message: Error description
            operation: Name of the operation (e.g. 'matmul', 'hadamard')
            left_shape: Shape of the left operand
            right_shape: Shape of the right operand
        """
        context = {}
        if operation:
            context["operation"] = operation
        if left_shape is not None:
            context["left_shape"] = tuple(left_shape)
        if right_shape is not None:
            context["right_shape"] = tuple(right_shape)

        super().__init__(message, None, context)
        self.operation = operation
        self.left_shape = left_shape
        self.right_shape = right_shape


class SymmetrizationError(DmrGraphsError):
    """Raised when a non-symmetric matrix has no valid symmetrizing witness."""
    pass


class DegenerateEvaluationError(DmrGraphsError):
    """Raised when a polynomial evaluation or divisor is (numerically) zero."""

    def __init__(self, message: str, index: Optional[int] = None, value: Optional[Any] = None):
        context = {}
        if index is not None:
            context["index"] = index
        if value is not None:
            context["value"] = value
        super().__init__(message, None, context)
        self.index = index
        self.value = value


class ConsistencyError(DmrGraphsError):
    """Raised when two computations that must agree do not."""

    def __init__(self, message: str, check: Optional[str] = None, details: Optional[Any] = None):
        context = {}
        if check:
            context["check"] = check
        if details is not None:
            context["details"] = details
        super().__init__(message, None, context)
        self.check = check
        self.details = details


class FileOperationError(DmrGraphsError):
    """Raised when file I/O operations fail."""

    def __init__(
        self,
        message: str,
        file_path: Optional[str] = None,
        operation: Optional[str] = None,
        original_error: Optional[Exception] = None
    ):
        """
        Initialize file I/O error.

        Args:
            message: Error description
            file_path: Path to the file that caused the error
            operation: The operation being performed (read, write, etc.)
            original_error: Original exception
        """
        context = {}
        if file_path:
            context["file_path"] = file_path
        if operation:
            context["operation"] = operation

        super().__init__(message, original_error, context)
        self.file_path = file_path
        self.operation = operation


class UnknownError(DmrGraphsError):
    """Raised when an unexpected error occurs that doesn't fit other categories."""

    def __init__(
        self,
        message: str = "An unexpected error occurred",
        original_error: Optional[Exception] = None,
        location: Optional[str] = None
    ):
        """
        Initialize unknown error.

        Args:
            message: Error description
            original_error: Original exception
            location: Location where the error occurred (function, module, etc.)
        """
        context = {}
        if location:
            context["location"] = location
        else:
            try:
                frame = traceback.extract_stack()[-3]  # caller's caller
                context["location"] = f"{frame.filename}:{frame.name}:{frame.lineno}"
            except (IndexError, AttributeError):
                pass

        super().__init__(message, original_error, context)
        self.location = location


def wrap_exception(
    original_error: Exception,
    error_class: type = UnknownError,
    message: Optional[str] = None,
    **kwargs
) -> DmrGraphsError:
    """
    Wrap a third-party exception in a dmr_graphs exception.

    Args:
        original_error: The original exception to wrap
        error_class: The dmr_graphs exception class to use
        message: Optional custom message (defaults to original error message)
        **kwargs: Additional arguments to pass to the error class

    Returns:
        A dmr_graphs exception wrapping the original error
    """
    if message is None:
        message = str(original_error)

    return error_class(
        message=message,
        original_error=original_error,
        **kwargs
    )
