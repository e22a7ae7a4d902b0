"""
Workbench Exceptions
Error hierarchy raised by the domain layer

Every error also derives from ValueError so that callers catching the
builtin keep working.
"""

from typing import Any, Optional


class WorkbenchError(ValueError):
    """Base class for all workbench errors"""


class DimensionMismatchError(WorkbenchError):
    """Operand dimensions do not agree with the declared factor structure"""


class InvalidTypeError(WorkbenchError):
    """A SystemType or GlobalType violates its own invariants"""


class MalformedTypeError(WorkbenchError):
    """A channel type cannot be interpreted the way an operation requires"""


class TypeMismatchError(WorkbenchError):
    """A resource has the wrong global type for the requested operation"""


class InvalidStateError(WorkbenchError):
    """A density operator or ket is not a valid quantum state"""


class NonHermitianError(WorkbenchError):
    """A matrix expected to be Hermitian is not"""


class NonUnitaryError(WorkbenchError):
    """A matrix expected to be unitary is not"""


class SingularOperatorError(WorkbenchError):
    """An operator expected to be invertible is (numerically) singular"""


class ParameterError(WorkbenchError):
    """Unknown identifier or invalid parameter value"""


class StrategyLimitError(WorkbenchError):
    """A brute-force enumeration exceeds the configured strategy limit"""


class FactorizationError(WorkbenchError):
    """A channel does not factorize the way its type promises"""


class CombValidationError(WorkbenchError):
    """A comb fragment is not a CPTP map or its wiring is inconsistent"""


class ChannelValidationError(WorkbenchError):
    """
    A Channel failed one of its structural invariants.

    The failing report is kept on the exception so callers can print the
    violated quantities rather than a bare message.
    """

    def __init__(self, message: str, report: Optional[Any] = None):
        super().__init__(message)
        self.report = report


class FileFormatError(WorkbenchError):
    """A channel or game file does not follow the canonical format"""
