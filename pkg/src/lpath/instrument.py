"""Global step counter for work-complexity measurements.

Construction and merge helpers report the sizes of the sequences they
produce, and occupancy-mask predicates report the mask area they scan.
Tests read the counter to check that the work grows linearly with the
number of vertices.

The counter is process-global and not thread safe; it exists for
measurement, not for correctness.
"""

from __future__ import annotations

_steps = 0


def reset() -> None:
    global _steps
    _steps = 0


def add(n: int) -> None:
    global _steps
    _steps += int(n)


def total() -> int:
    return _steps
