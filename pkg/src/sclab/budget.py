"""Wall-clock budgets for the searches that can blow up."""

from __future__ import annotations

import os
import time

from .errors import BudgetExceeded

DEFAULT_BUDGET_MS = 30_000
CONSTRUCTION_CAP = 2000
SUBGROUP_CAP = 200


def default_budget_ms() -> int:
    raw = os.environ.get("SCLAB_BUDGET_MS")
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return DEFAULT_BUDGET_MS


class Budget:
    """A deadline shared by every search started under it.

    ``Budget(None)`` never expires.
    """

    def __init__(self, ms: int | None = None):
        self.ms = ms
        self._deadline = None if ms is None else time.monotonic() + ms / 1000.0

    def expired(self) -> bool:
        return self._deadline is not None and time.monotonic() > self._deadline

    def check(self, what: str = "search") -> None:
        if self.expired():
            raise BudgetExceeded(f"{what} exceeded budget of {self.ms} ms")


UNLIMITED = Budget(None)


def as_budget(budget: Budget | int | None) -> Budget:
    if isinstance(budget, Budget):
        return budget
    if budget is None:
        return UNLIMITED
    return Budget(int(budget))
