"""The pattern estimator ``f(p, m)``, its reduction trace, and canonical ranks.

Cases are tried in a fixed order: zero pattern, non-copyable (drop last row),
successor (iterate ``x -> f(p.del, x)`` ``2**m`` times from ``m``), limit
(``E(m)``), and otherwise ``M``.

Budget steps measure row work: every reduction is charged the length of the
pattern it rewrites, and ``E(m)`` is additionally charged the rows it builds,
so evaluation time stays proportional to ``max_steps``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

from .budget import EvalBudget, EvalResult, Meter, run_metered
from .errors import NotCopyable, NotInImage
from .ordinal import Ordinal, decode_ps
from .pattern import Blp, PatternClass, classify, complete_suitable, copied, delete, e_length, expand


class Case(Enum):
    ZERO = "Zero"
    NON_COPYABLE_DEL = "NonCopyableDel"
    SUCCESSOR = "Successor"
    LIMIT = "Limit"
    TRANSIENT = "Transient"


def fire(p: Blp) -> Case:
    """Which clause of ``f`` applies to ``p``."""
    return _fire(p)[0]


def _fire(p: Blp) -> Tuple[Case, Optional[Blp]]:
    # also hands back p.Copied so the M step does not recompute it
    cls = classify(p)
    if cls is PatternClass.ZERO:
        return Case.ZERO, None
    try:
        q = copied(p)
    except NotCopyable:
        return Case.NON_COPYABLE_DEL, None
    if cls is PatternClass.SUCCESSOR:
        return Case.SUCCESSOR, q
    if cls is PatternClass.LIMIT:
        return Case.LIMIT, q
    return Case.TRANSIENT, q


def _expand_metered(meter: Meter, p: Blp, m: int) -> Blp:
    # building E(m) costs one step per row materialized
    rows = e_length(p, min(m, 64))
    meter.need_steps(rows)
    meter.tick(rows)
    return expand(p, m)


def _f(meter: Meter, p: Blp, m: int) -> int:
    # frames: [p.del, iterations left]; ``val`` carries the current iterate
    stack: list = []
    calling = True
    val = 0
    while True:
        if calling:
            while True:
                meter.tick(p.n)
                case, q = _fire(p)
                if case is Case.ZERO:
                    meter.need_bits(m.bit_length() + m)
                    val = m << m
                    break
                if case is Case.NON_COPYABLE_DEL:
                    p = delete(p)
                elif case is Case.LIMIT:
                    p = _expand_metered(meter, p, m)
                elif case is Case.TRANSIENT:
                    p = complete_suitable(q, p)
                else:
                    meter.need_steps(2 ** min(m, 64))
                    stack.append([delete(p), 2**m])
                    val = m
                    break
            calling = False
            continue
        if not stack:
            return val
        top = stack[-1]
        if top[1] == 0:
            stack.pop()
            continue
        top[1] -= 1
        p, m = top[0], val
        calling = True


def f_eval(p: Blp, m: int, budget: EvalBudget | None = None) -> EvalResult:
    if m < 1:
        raise ValueError("m must be >= 1")
    return run_metered(_f, budget, p, m)


@dataclass(frozen=True)
class TraceStep:
    index: int
    case: Case
    pattern_length: int
    note: str

    def __str__(self):
        return f"{self.index}. {self.case.value.upper()} n={self.pattern_length} {self.note}"


def f_trace(p: Blp, m: int, max_steps: int = 1000) -> List[TraceStep]:
    """Clauses fired while reducing ``f(p, m)``.

    Every clause but the successor one keeps the argument ``m``; at a successor
    step the trace follows the first iterate ``f(p.del, m)``, which is also the
    first thing an evaluation computes.  Stops at the zero pattern.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    out: List[TraceStep] = []
    while len(out) < max_steps:
        case, q = _fire(p)
        k = len(out) + 1
        if case is Case.ZERO:
            out.append(TraceStep(k, case, p.n, f"{m}·2^{m}"))
            break
        if case is Case.NON_COPYABLE_DEL:
            out.append(TraceStep(k, case, p.n, "del"))
            p = delete(p)
        elif case is Case.SUCCESSOR:
            out.append(TraceStep(k, case, p.n, f"(f(del,·))^(2^{m})({m})"))
            p = delete(p)
        elif case is Case.LIMIT:
            out.append(TraceStep(k, case, p.n, f"E({m})"))
            p = expand(p, m)
        else:
            out.append(TraceStep(k, case, p.n, "M"))
            p = complete_suitable(q, p)
    return out


def format_trace(steps: List[TraceStep]) -> str:
    return "\n".join(map(str, steps))


def canonical_ps(p: Blp) -> Optional[tuple]:
    """Read back ``(t_1, ..., t_k)`` if rows 3.. follow the canonical template."""
    if p.n < 2 or p.s(1) != (0, 1, 2) or p.s(2) != (0, 1, 2, 3):
        return None
    out = []
    for i in range(3, p.n + 1):
        s, l = p.s(i), p.step(i)
        if s == (0, 1, 2, i, i + 1) and l == 2:
            out.append(0)
        elif len(s) == 6 and s[:3] == (0, 1, 2) and s[4:] == (i, i + 1) and l == 3 and 2 < s[3] < i:
            out.append(s[3] - 2)
        else:
            return None
    return tuple(out)


def rank_canonical(p: Blp) -> Optional[Ordinal]:
    """Ordinal ``a`` with ``palpha(a) == p``, or ``None`` for other shapes."""
    t = canonical_ps(p)
    if t is None:
        return None
    try:
        return decode_ps(t)
    except NotInImage:
        return None
