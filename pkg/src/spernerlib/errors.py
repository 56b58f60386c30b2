"""Error types shared across the package.

Each error carries the process exit code used by the command line front end:
2 for bad input, 3 for an exhausted resource cap, 4 for input that fails the
mathematical hypothesis of the requested operation.
"""

from __future__ import annotations


class SpernerError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 1


class InputError(SpernerError):
    """Malformed or out-of-range input."""

    exit_code = 2


class ResourceLimitError(SpernerError):
    """A configured cap (size, count, iterations, time) was exceeded.

    ``partial_lower_bound``, when set, is a certified lower bound found
    before the limit hit (used by the exhaustive search).
    """

    exit_code = 3

    def __init__(self, message: str, partial_lower_bound: int | None = None):
        super().__init__(message)
        self.partial_lower_bound = partial_lower_bound


class HypothesisError(SpernerError):
    """The input does not satisfy the hypothesis of the requested formula."""

    exit_code = 4
