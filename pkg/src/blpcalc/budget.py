"""Evaluation budgets for computations whose results can be astronomically large.

Every evaluator returns either :class:`Value` or :class:`Exceeded`; it never
returns a truncated or saturated number.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

DEFAULT_MAX_BITS = 1 << 20
DEFAULT_MAX_STEPS = 10**7


@dataclass(frozen=True)
class EvalBudget:
    max_bits: int = DEFAULT_MAX_BITS
    max_steps: int = DEFAULT_MAX_STEPS

    def __post_init__(self):
        if self.max_bits < 1 or self.max_steps < 1:
            raise ValueError("budget caps must be >= 1")


@dataclass(frozen=True)
class Value:
    value: int

    ok = True


@dataclass(frozen=True)
class Exceeded:
    reason: str  # "bits" or "steps"
    steps_done: int

    ok = False


EvalResult = Union[Value, Exceeded]


class BudgetExceeded(Exception):
    """Raised inside evaluators; converted to :class:`Exceeded` at the boundary."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class Meter:
    """Step counter plus bit-size guard for a single evaluation."""

    def __init__(self, budget: EvalBudget | None = None):
        self.budget = budget or EvalBudget()
        self.steps = 0

    def tick(self, n: int = 1) -> None:
        self.steps += n
        if self.steps > self.budget.max_steps:
            raise BudgetExceeded("steps")

    def remaining(self) -> int:
        return self.budget.max_steps - self.steps

    def need_steps(self, n: int) -> None:
        """Fail early when at least ``n`` more steps are certainly required."""
        if n > self.remaining():
            self.steps = self.budget.max_steps
            raise BudgetExceeded("steps")

    def need_bits(self, nbits: int) -> None:
        if nbits > self.budget.max_bits:
            raise BudgetExceeded("bits")

    def check(self, v: int) -> int:
        self.need_bits(v.bit_length())
        return v


def run_metered(fn, budget: EvalBudget | None, *args) -> EvalResult:
    meter = Meter(budget)
    try:
        v = fn(meter, *args)
    except BudgetExceeded as e:
        return Exceeded(e.reason, min(meter.steps, meter.budget.max_steps))
    return Value(v)
