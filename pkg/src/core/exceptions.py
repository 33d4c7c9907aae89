"""
Custom exceptions and the exit-code table used by the command line
"""
from typing import Optional, Type


class OtmError(Exception):
    """Base class for every error raised by the library"""
    def __init__(self, message: str = "Computation error occurred"):
        self.message = message
        super().__init__(self.message)


class DimensionError(OtmError):
    """Exception raised when tensor-factor dimensions do not line up"""
    def __init__(self, message: str = "Dimension mismatch"):
        super().__init__(message)


class OperatorValidationError(OtmError):
    """Exception raised when an operator violates a structural invariant"""
    def __init__(self, message: str = "Operator validation failed"):
        super().__init__(message)


class ParameterError(OtmError):
    """Exception raised for out-of-range physical parameters; `field` names the offending input"""
    def __init__(self, message: str, suggestion: Optional[str] = None, field: Optional[str] = None):
        self.suggestion = suggestion
        self.field = field
        if suggestion:
            message = f"{message} (suggestion: {suggestion})"
        super().__init__(message)


class PreconditionError(OtmError):
    """Exception raised when an operation is called outside its domain"""
    def __init__(self, message: str):
        super().__init__(message)


class ConfigError(OtmError):
    """Exception raised for malformed run configurations"""
    def __init__(self, message: str, line: Optional[int] = None, path: Optional[str] = None):
        self.line = line
        self.path = path
        location = path or "<config>"
        if line is not None:
            location = f"{location}:{line}"
        super().__init__(f"{location}: {message}")


class UnknownSuiteError(OtmError):
    """Exception raised when a verification suite name is not registered"""
    def __init__(self, suite_name: str, known: Optional[list] = None):
        self.suite_name = suite_name
        known_str = ", ".join(known or [])
        super().__init__(f"Unknown suite '{suite_name}'. Known suites: {known_str}")


class CheckFailure(OtmError):
    """Exception raised when a requested verification exceeds its tolerance"""
    def __init__(self, check_name: str, worst_residual: float, tolerance: float, results: Optional[list] = None):
        self.check_name = check_name
        self.results = results or []
        self.worst_residual = worst_residual
        self.tolerance = tolerance
        super().__init__(
            f"Check '{check_name}' failed: worst residual {worst_residual:.3e} "
            f"exceeds tolerance {tolerance:.1e}"
        )


EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

_EXIT_CODES: dict[Type[Exception], int] = {
    ConfigError: EXIT_USAGE,
    UnknownSuiteError: EXIT_USAGE,
    CheckFailure: EXIT_CHECK_FAILED,
}


def exit_code_for(exc: BaseException) -> int:
    """
    Map an exception to the process exit code
    """
    for exc_type, code in _EXIT_CODES.items():
        if isinstance(exc, exc_type):
            return code
    return EXIT_CHECK_FAILED
