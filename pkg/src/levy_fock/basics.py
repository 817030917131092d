"""

    LevyFock: Lévy processes, cocycles and Fock space

    Basic definitions: the exception hierarchy

    Copyright (C) 2026 LevyFock developers.

    This software is licensed under the MIT License, see LICENSE.txt.


    This module defines the exceptions raised by the LevyFock package.
    Every exception has a short error code and a description, and knows
    which exit code the command line tool should return when it escapes
    a pipeline.

    Error codes generated by the package:
    -------------------------------------

    I001: Malformed input document (JSON, CSV or grid specification)
    I002: Unknown key in a triplet document
    I003: Invalid parameter value
    C001: Configuration file error
    E001: Integrability condition violated for the chosen convention
    E002: Divergent moment
    E003: Invalid moment kind
    E004: Inadmissible target convention
    Q001: Quadrature did not converge within its node budget
    P001: Function cannot be evaluated at a needed point
    P002: Matrix or function is not Hermitian
    P003: Characteristic function crosses (or comes too close to) zero
    P004: Phase step too large between neighbouring grid points
    G001: Kernel is not positive semidefinite
    F001: Truncated Fock space exceeds the dimension budget
    F002: Characteristic function vanishes at a coherent state label
    S001: Lévy measure cannot be sampled
    X001: Internal identity cross-check failed

"""

from typing import Any, Dict, Optional, Type, TypeVar, cast


# A dictionary of error classes, keyed by error code
ErrorType = Type["LevyFockError"]
ERROR_CLASS_REGISTRY: Dict[str, ErrorType] = dict()

_ErrorClass = TypeVar("_ErrorClass", bound=ErrorType)

# Exit codes of the command line tool
EXIT_OK = 0
EXIT_VERDICT = 1
EXIT_USAGE = 2


def register_error_class(cls: _ErrorClass) -> _ErrorClass:
    """A decorator that populates the registry of all error classes,
    to aid in documentation and in mapping codes back to classes"""
    global ERROR_CLASS_REGISTRY
    ERROR_CLASS_REGISTRY[cast(Any, cls).code] = cast(ErrorType, cls)
    return cls


class LevyFockError(Exception):

    """Base class for errors raised by the LevyFock package"""

    code = "X000"
    exit_code = EXIT_USAGE

    def __init__(self, msg: str, **detail: Any) -> None:
        super().__init__(msg)
        self._detail = detail

    @property
    def description(self) -> str:
        return Exception.__str__(self)

    @property
    def detail(self) -> Dict[str, Any]:
        """Numerical detail attached to the error, such as the offending value"""
        return self._detail

    def __str__(self) -> str:
        return "{0}: {1}".format(self.code, self.description)

    def to_dict(self) -> Dict[str, Any]:
        d: Dict[str, Any] = {"code": self.code, "descr": self.description}
        if self._detail:
            d["detail"] = self._detail
        return d


@register_error_class
class InputError(LevyFockError):
    code = "I001"


@register_error_class
class UnknownKeyError(InputError):
    code = "I002"


@register_error_class
class ParameterError(InputError):
    code = "I003"


@register_error_class
class ConfigError(LevyFockError):

    """Configuration file error, optionally carrying file name and line"""

    code = "C001"

    def __init__(self, msg: str) -> None:
        super().__init__(msg)
        self.fname: Optional[str] = None
        self.line = 0

    def set_pos(self, fname: str, line: int) -> None:
        """Set file name and line information, if not already set"""
        if not self.fname:
            self.fname = fname
            self.line = line

    @property
    def description(self) -> str:
        s = Exception.__str__(self)
        if not self.fname:
            return s
        return "File {0}, line {1}: {2}".format(self.fname, self.line, s)


@register_error_class
class IntegrabilityError(LevyFockError):
    code = "E001"


@register_error_class
class DivergentMomentError(IntegrabilityError):
    code = "E002"


@register_error_class
class InvalidMomentError(LevyFockError):
    code = "E003"


@register_error_class
class InadmissibleConventionError(IntegrabilityError):
    code = "E004"


@register_error_class
class QuadratureError(LevyFockError):

    """Adaptive quadrature ran out of subintervals before converging"""

    code = "Q001"


@register_error_class
class UnevaluableError(LevyFockError):
    code = "P001"


@register_error_class
class NonHermitianError(LevyFockError):
    code = "P002"


@register_error_class
class ZeroCrossingError(LevyFockError):
    code = "P003"


@register_error_class
class AliasingError(LevyFockError):
    code = "P004"


@register_error_class
class NotPsdError(LevyFockError):
    code = "G001"
    exit_code = EXIT_VERDICT


@register_error_class
class TruncationOverflowError(LevyFockError):
    code = "F001"


@register_error_class
class VanishingCharFnError(LevyFockError):
    code = "F002"


@register_error_class
class SamplingError(LevyFockError):
    code = "S001"


@register_error_class
class ConsistencyError(LevyFockError):

    """Two independent computations of the same quantity disagree"""

    code = "X001"
    exit_code = EXIT_VERDICT
