"""
Exception hierarchy shared by the library and the command line.
"""

from pathlib import Path
from typing import Optional, Union


class IntersectionToolError(Exception):
    """Base exception for toolkit errors."""
    error_title = "Computation Failed"
    exit_code = 1


class ArgumentError(IntersectionToolError, ValueError):
    """An argument is outside the documented range."""
    error_title = "Invalid Argument"
    exit_code = 2


class CapacityError(ArgumentError):
    """The instance does not fit the fixed-width representation."""
    error_title = "Invalid Argument: Capacity Exceeded"


class DataError(IntersectionToolError):
    """An input file is malformed."""
    error_title = "Invalid Input File"
    exit_code = 1

    def __init__(self, message: str, path: Optional[Union[str, Path]] = None,
                 line_number: Optional[int] = None):
        """
        Initialize a data error.

        Args:
            message: What is wrong with the input
            path: File the input came from, if any
            line_number: 1-based line number of the offending line
        """
        self.path = str(path) if path is not None else None
        self.line_number = line_number

        location = self.path or "<input>"
        if line_number is not None:
            location = f"{location}:{line_number}"
        super().__init__(f"{location}: {message}")
