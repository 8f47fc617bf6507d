"""Laver tables of order ``2**n`` on the representatives ``1..2**n``.

``2**n`` acts as the identity row, ``a * 1 = a + 1`` and
``a * b = (a * (b - 1)) * (a + 1)``.  Rows are filled lazily, left to right,
with an explicit work stack instead of recursion.

A :class:`LaverTable` is single-writer while its memo is being filled.  Either
confine an instance to one thread, or call :meth:`LaverTable.fill` first and
share it read-only afterwards.
"""

from __future__ import annotations

from functools import lru_cache
from typing import List, Optional

from .budget import BudgetExceeded, EvalBudget, EvalResult, Meter, run_metered
from .errors import NoWitness, OutOfRange


class LaverTable:
    def __init__(self, n: int):
        if n < 0:
            raise OutOfRange(f"table order exponent must be >= 0, got {n}")
        self.n = n
        self.size = 1 << n
        # rows[a] holds a*1, a*2, ... for the prefix computed so far
        self.rows: List[List[int]] = [[] for _ in range(self.size + 1)]
        self.rows[self.size] = list(range(1, self.size + 1))

    def _check(self, a: int, b: int) -> None:
        if not (1 <= a <= self.size and 1 <= b <= self.size):
            raise OutOfRange(f"({a}, {b}) outside 1..{self.size}")

    def _extend(self, a: int, b: int, meter: Optional[Meter]) -> None:
        rows, top = self.rows, self.size
        stack = [(a, b)]
        while stack:
            x, want = stack[-1]
            row = rows[x]
            if len(row) >= want:
                stack.pop()
                continue
            if not row:
                row.append(x + 1)
                if meter:
                    meter.tick()
                continue
            p = row[-1]
            if p == top:
                row.append(x + 1)
            elif len(rows[p]) >= x + 1:
                row.append(rows[p][x])
            else:
                stack.append((p, x + 1))
                continue
            if meter:
                meter.tick()

    def star(self, a: int, b: int, meter: Optional[Meter] = None) -> int:
        self._check(a, b)
        row = self.rows[a]
        if len(row) < b:
            self._extend(a, b, meter)
        return row[b - 1]

    def row(self, a: int, meter: Optional[Meter] = None) -> List[int]:
        self._check(a, 1)
        if len(self.rows[a]) < self.size:
            self._extend(a, self.size, meter)
        return list(self.rows[a])

    def fill(self, meter: Optional[Meter] = None) -> None:
        for a in range(self.size, 0, -1):
            self.row(a, meter)

    def table(self, meter: Optional[Meter] = None) -> List[List[int]]:
        self.fill(meter)
        return [list(self.rows[a]) for a in range(1, self.size + 1)]

    def period(self, a: int, meter: Optional[Meter] = None) -> int:
        r = self.row(a, meter)
        p = 1
        while p < self.size:
            if all(r[i] == r[i + p] for i in range(self.size - p)):
                return p
            p *= 2
        return self.size

    def compose_index(self, a: int, b: int, meter: Optional[Meter] = None) -> int:
        self._check(a, b)
        self.fill(meter)
        rows = self.rows
        target = [rows[a][y - 1] for y in rows[b]]
        for c in range(1, self.size + 1):
            if rows[c] == target:
                return c
        raise NoWitness(f"no c with c*x = {a}*({b}*x) in order 2^{self.n}")


@lru_cache(maxsize=32)
def laver_table(n: int) -> LaverTable:
    """Shared table for order ``2**n``."""
    return LaverTable(n)


def star_allowed(n: int, budget: EvalBudget) -> bool:
    return n * (1 << n) <= budget.max_bits


def table_allowed(n: int, budget: EvalBudget) -> bool:
    return 1 << (2 * n) <= budget.max_bits


def _guard(n: int, budget: Optional[EvalBudget], full: bool) -> EvalBudget:
    budget = budget or EvalBudget()
    if n < 0:
        raise OutOfRange(f"table order exponent must be >= 0, got {n}")
    ok = table_allowed(n, budget) if full else star_allowed(n, budget)
    if not ok:
        raise BudgetExceeded("bits")
    return budget


def star(n: int, a: int, b: int, budget: Optional[EvalBudget] = None) -> int:
    """``a * b`` in the table of order ``2**n``; raises ``BudgetExceeded`` past the cap."""
    _guard(n, budget, full=False)
    return laver_table(n).star(a, b)


def table(n: int, budget: Optional[EvalBudget] = None) -> List[List[int]]:
    _guard(n, budget, full=True)
    return laver_table(n).table()


def period(n: int, a: int, budget: Optional[EvalBudget] = None) -> int:
    _guard(n, budget, full=True)
    t = laver_table(n)
    t._check(a, 1)
    return t.period(a)


def compose_index(n: int, a: int, b: int, budget: Optional[EvalBudget] = None) -> int:
    """Least ``c`` with ``c * x == a * (b * x)`` for every ``x``."""
    _guard(n, budget, full=True)
    return laver_table(n).compose_index(a, b)


def _f1(meter: Meter, n: int) -> int:
    i, y = 1, n
    while y > 0:
        z = y
        while True:
            if not star_allowed(z, meter.budget):
                raise BudgetExceeded("bits")
            t = laver_table(z)
            w = 1
            for _ in range(i - 1):
                meter.tick()
                w = t.star(1, w, meter)
            meter.tick()
            if t.star(w, 1 << y, meter) == t.size:
                z += 1
            else:
                break
        i += 1
        y = z - 2
    return i


def f1(n: int, budget: Optional[EvalBudget] = None) -> EvalResult:
    if n < 0:
        raise OutOfRange(f"n must be >= 0, got {n}")
    return run_metered(_f1, budget, n)


def format_table(rows: List[List[int]]) -> str:
    width = len(str(len(rows)))
    return "\n".join(" ".join(f"{v:>{width}}" for v in r) for r in rows)
