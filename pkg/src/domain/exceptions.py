"""
Domain exceptions for the quantile dyadic CART library
"""
from typing import Optional


class QdcartError(Exception):
    """Base class for all library errors"""


class UsageError(QdcartError, ValueError):
    """Invalid arguments passed to a library operation"""


class ConfigurationError(UsageError):
    """Invalid configuration value (tau, lambda, gamma, scenario size)"""


class DataError(UsageError):
    """Input data that cannot be fitted, e.g. NaN or infinite values"""


class SignalParseError(UsageError):
    """
    Failure to parse a signal file

    line and column are 1-based and point at the offending token
    """

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        location = ""
        if line is not None:
            location = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(f"{message}{location}")


class InfeasibleConfigurationError(QdcartError):
    """Minimum rectangle size gamma exceeds the lattice size"""


class UnsupportedError(QdcartError):
    """Operation not available for this lattice, e.g. qort1d with d >= 2"""


class InternalConsistencyError(QdcartError):
    """Dynamic-programming tables are incomplete or contradictory"""
