"""Resource guards for enumerations that blow up combinatorially.

Every guarded entry point takes an optional override so callers (and the
CLI ``--max-weight`` flag) can raise a limit deliberately.  The
``PMH_MAX_WEIGHT`` environment variable raises the shell-weight guard for
a whole process.
"""

from __future__ import annotations

import os

ENV_MAX_WEIGHT = "PMH_MAX_WEIGHT"

DEFAULT_MAX_WEIGHT = 6        # packed-matrix shells and counting tables
DEFAULT_SPLIT_WEIGHT = 24     # entrywise splittings in the sum coproduct
DEFAULT_ANTIPODE_WEIGHT = 8   # ordered decompositions in the antipode
DEFAULT_DELTA_DIM = 5         # admissible-pair sums grow like 1,4,24,196,2016,...
DEFAULT_QSYM_DELTA_WEIGHT = 12
DEFAULT_KXY_PART = 5          # weight of a single shell factor in the from_nsym lift
DEFAULT_FIBER_LENGTH = 6      # composition length in reading-fiber sums
DEFAULT_QN = 5
DEFAULT_MAT_SHELL_SIZE = 500_000


class GuardExceeded(RuntimeError):
    """A computation was refused because it would exceed a resource guard."""

    def __init__(self, guard: str, limit: int, requested: int, raise_with: str):
        self.guard = guard
        self.limit = limit
        self.requested = requested
        self.raise_with = raise_with
        super().__init__(
            f"guard '{guard}' allows at most {limit}, got {requested}; "
            f"raise it with {raise_with}"
        )


def max_weight_default() -> int:
    """Shell-weight guard default, honouring the PMH_MAX_WEIGHT override."""
    value = os.environ.get(ENV_MAX_WEIGHT)
    if value is None:
        return DEFAULT_MAX_WEIGHT
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"{ENV_MAX_WEIGHT} must be an integer, got {value!r}") from None


def check(guard: str, requested: int, limit: int,
          raise_with: str = "--max-weight or PMH_MAX_WEIGHT") -> None:
    if requested > limit:
        raise GuardExceeded(guard, limit, requested, raise_with)
