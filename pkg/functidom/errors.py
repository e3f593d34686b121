"""Exception hierarchy for functidom.

Every error carries the process exit status the CLI reports for it, so the
mapping from failure kind to status lives in exactly one place.
"""
from __future__ import annotations

from typing import Optional


class FunctidomError(Exception):
    """Base class for all library errors."""

    exit_code: int = 1


class InvalidParameterError(FunctidomError, ValueError):
    """An argument is outside the documented domain of an operation."""

    exit_code = 2


class UnsupportedSizeError(FunctidomError):
    """A desk-scale limit (oracle order, isomorphism order, enumeration size) was exceeded."""

    exit_code = 2


class ParseError(FunctidomError, ValueError):
    """Graph or map text could not be parsed."""

    exit_code = 2


class ConfigurationError(FunctidomError):
    """Environment variables or command-line flags are inconsistent."""

    exit_code = 2


class ResourceLimitError(FunctidomError):
    """The solver explored more nodes than its budget allows.

    Carries the best bounds known when the search stopped so callers can
    report a partial result instead of a silent approximation.
    """

    exit_code = 3

    def __init__(self, message: str, lower_bound: int, best_size: int, best_witness: Optional[object] = None):
        super().__init__(message)
        self.lower_bound = lower_bound
        self.best_size = best_size
        self.best_witness = best_witness


class PreconditionError(FunctidomError):
    """An instance does not satisfy the hypothesis of a theorem or construction."""

    exit_code = 4


class InfeasibleError(FunctidomError):
    """Include/exclude constraints leave no dominating set."""

    exit_code = 4


class ConstructionError(FunctidomError):
    """A construction emitted a set that is not dominating or has the wrong size."""

    exit_code = 1


class ReportWriteError(FunctidomError):
    """A report artifact could not be written."""

    exit_code = 5
