"""Exceptions shared across the library, CLI and service.

Each error maps to one CLI exit code / HTTP error code:

  InvalidInstance       exit 3 / HTTP 422, code "invalid"
  NoPathExists          exit 4 / HTTP 409, code "no_path"
  OracleBudgetExceeded  exit 5 / HTTP 422, code "budget"

Usage errors (bad flags, malformed JSON) are exit 2 / HTTP 400 and are
raised by the CLI / service layers directly, not from here.
"""

from __future__ import annotations


class LPathError(Exception):
    """Base class for all library errors."""


class InvalidInstance(LPathError):
    """Shape parameters or endpoints violate the domain constraints."""


class NoPathExists(LPathError):
    """The requested Hamiltonian cycle / path does not exist.

    ``condition`` names the forbidden condition that applies
    (e.g. "F1", "F2", "F3", "F4", "F5", or "HC" for cycle nonexistence).
    """

    def __init__(self, message: str, condition: str | None = None):
        super().__init__(message)
        self.condition = condition


class OracleBudgetExceeded(LPathError):
    """Instance is larger than the exhaustive-search budget allows."""


class FacingUnsatisfiable(NoPathExists):
    """No Hamiltonian path between the endpoints uses a boundary edge
    on the requested side (thin rectangles restrict which sides can
    carry a flat face)."""

    def __init__(self, message: str):
        super().__init__(message, condition="facing")
