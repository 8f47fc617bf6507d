"""Basic Laver patterns and their rewriting operations.

A pattern is a staircase of strictly increasing integer rows; row ``i`` (1-based)
ends in ``i, i+1`` and carries a step length.  Rows are 1-indexed in every
public function to match the usual notation; ``s[-k]`` is the k-th entry from
the end.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import (
    BadT,
    InvalidPattern,
    NotCopyable,
    NotSuitable,
    ParseError,
    UnknownName,
    WrongType,
    ZeroPattern,
)
from .ordinal import Ordinal, ps


@dataclass(frozen=True)
class Row:
    entries: Tuple[int, ...]
    step: int

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))

    def __len__(self):
        return len(self.entries)

    @property
    def suitable(self) -> bool:
        return len(self.entries) > 3 and len(self.entries) % 2 == 1


@dataclass(frozen=True)
class Blp:
    rows: Tuple[Row, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))

    @classmethod
    def of(cls, *rows: Tuple[Sequence[int], int]) -> "Blp":
        """``Blp.of(((0,1,2), 1), ((0,1,2,3), 1))``"""
        return cls(tuple(Row(tuple(e), l) for e, l in rows))

    @property
    def n(self) -> int:
        return len(self.rows)

    def s(self, i: int) -> Tuple[int, ...]:
        return self.rows[i - 1].entries

    def step(self, i: int) -> int:
        return self.rows[i - 1].step

    def append(self, entries: Sequence[int], step: int) -> "Blp":
        return Blp(self.rows + (Row(tuple(entries), step),))

    def prefix(self, k: int) -> "Blp":
        return Blp(self.rows[:k])

    def entry_count(self) -> int:
        return sum(len(r) for r in self.rows)

    def __str__(self):
        return format_figure(self)


class PatternClass(Enum):
    ZERO = "Zero"
    SUCCESSOR = "Successor"
    LIMIT = "Limit"
    TRANSIENT = "Transient"


ZERO_BLP = Blp.of(((0, 1, 2), 1), ((0, 1, 2, 3), 1))


def validate(p: Blp) -> List[str]:
    """Return the list of violated pattern invariants (empty when valid)."""
    out = []
    if p.n < 2:
        out.append(f"length {p.n} < 2")
    for i, row in enumerate(p.rows, 1):
        s, l = row.entries, row.step
        if len(s) < 3:
            out.append(f"row {i}: fewer than 3 entries")
            continue
        if any(x < 0 for x in s) or any(x >= y for x, y in zip(s, s[1:])):
            out.append(f"row {i}: entries not strictly increasing naturals")
        if s[-2:] != (i, i + 1):
            out.append(f"row {i}: last two entries must be {i},{i + 1}")
        k = len(s)
        if k % 2 == 1:
            ok = l == (k - 1) // 2
        elif k == 4:
            ok = l == 1
        else:
            ok = l in (k // 2, k // 2 - 1)
        if not ok:
            out.append(f"row {i}: step {l} not allowed for a row of length {k}")
    if p.n >= 1 and p.s(1) != (0, 1, 2):
        out.append("row 1 must be 0,1,2")
    if p.n >= 2 and p.s(2) != (0, 1, 2, 3):
        out.append("row 2 must be 0,1,2,3")
    return out


def check(p: Blp) -> Blp:
    bad = validate(p)
    if bad:
        raise InvalidPattern(bad)
    return p


def ap(s: Sequence[int], t: Sequence[int], l: int) -> Optional[Tuple[int, ...]]:
    """Apply the row ``t`` (step ``l``) to the row ``s``; ``None`` when undefined."""
    if len(t) < l + 2 or t[-l - 2] <= 0:
        return None
    lo, hi, top = t[0], t[-l - 2], t[-l - 1]
    pos = {x: j for j, x in enumerate(t)}
    out = []
    for x in s:
        if x > top:
            return None
        if x < lo:
            out.append(x)
        elif x < hi:
            if x not in pos:
                return None
            out.append(t[pos[x] + l])
        else:
            out.append(_ap_shift(t, x, hi))
    return tuple(out)


def _ap_shift(t: Sequence[int], x: int, hi: int) -> int:
    # entries at or above t[-l-2] slide up so that t[-l-2] lands on t[-2]
    return t[-2] + x - hi


def delete(p: Blp) -> Blp:
    if p.n <= 2:
        raise ZeroPattern("cannot delete a row of the zero pattern")
    return p.prefix(p.n - 1)


def copy_range(p: Blp) -> Optional[Tuple[int, int]]:
    """Rows ``(a, b)`` the last row would be applied to, or ``None`` if meaningless."""
    if p.n <= 2:
        return None
    t, l = p.rows[-1].entries, p.rows[-1].step
    if len(t) < l + 2:
        return None
    a, b = t[-l - 2], t[-l - 1] - 1
    if a < 1 or b < a or b >= p.n:
        return None
    return a, b


def copied(p: Blp) -> Blp:
    rng = copy_range(p)
    if rng is None:
        raise NotCopyable(f"pattern of length {p.n} is not copyable")
    a, b = rng
    last = p.rows[-1]
    new = []
    for i in range(a, b + 1):
        e = ap(p.s(i), last.entries, last.step)
        if e is None:
            raise NotCopyable(f"pattern is not copyable: applying the last row to row {i} is undefined")
        new.append(Row(e, p.step(i)))
    return Blp(p.rows[:-1] + tuple(new))


def copyable(p: Blp) -> bool:
    try:
        copied(p)
    except NotCopyable:
        return False
    return True


def classify(p: Blp) -> PatternClass:
    if p.n == 2:
        return PatternClass.ZERO
    last = p.rows[-1]
    if last.entries[:3] == (0, 1, 2):
        if len(last) == 6 and last.step == 3:
            return PatternClass.LIMIT
        if len(last) == 5:
            return PatternClass.SUCCESSOR
    return PatternClass.TRANSIENT


def _interp_step_row(i: int, r: int) -> int:
    # the r-th interpolating row sits at index i+r and carries the new step
    return i + r


def _completion_set(xs: List[int]) -> List[int]:
    # xs = [x_0, ..., x_k]; neither the start nor the halting value is used
    return xs[1:-1]


def comp(p: Blp, i: int, T: Iterable[int]) -> Blp:
    """Complete suitable row ``i`` by naming the values ``T`` between its middle entries."""
    if not 1 <= i <= p.n or not p.rows[i - 1].suitable:
        raise NotSuitable(f"row {i} is not suitable")
    s, l = p.s(i), p.step(i)
    lo, hi = s[l - 1], s[l]
    T = sorted(set(T))
    if any(not lo < t < hi for t in T):
        raise BadT(f"values must lie strictly between {lo} and {hi}")
    if not T:
        return p
    u = len(T)
    rows: List[List] = [[r.entries, r.step] for r in p.rows[: i - 1]]
    for r in range(u + 1):
        k = min(r + 1, u)
        e = s[:l] + tuple(T[:k]) + s[l:-1] + tuple(range(i + 1, i + r + 2))
        rows.append([e, l])
    for r in range(u):
        rows[_interp_step_row(i, r) - 1][1] = l + r + 1
    rows[i + u - 1][1] = l + u
    for row in p.rows[i:]:
        rows.append([tuple(x + u if x > i else x for x in row.entries), row.step])
    return Blp(tuple(Row(e, st) for e, st in rows))


def completion_values(p: Blp, i: int) -> List[int]:
    if not 1 <= i <= p.n or not p.rows[i - 1].suitable:
        raise NotSuitable(f"row {i} is not suitable")
    s, l = p.s(i), p.step(i)
    lo = s[l - 1]
    xs = [s[l]]
    while xs[-1] > lo:
        nxt = p.s(xs[-1])[-3]
        if nxt >= xs[-1]:
            raise InvalidPattern([f"row {xs[-1]} does not end in {xs[-1]}, {xs[-1] + 1}"])
        xs.append(nxt)
    return _completion_set(xs)


def fullcomp(p: Blp, i: int) -> Blp:
    return comp(p, i, completion_values(p, i))


def _m_rows(p: Blp, q: Blp) -> List[int]:
    # suitable rows of the copied pattern, highest first
    return [i for i in range(q.n, 0, -1) if q.rows[i - 1].suitable]


def complete_suitable(q: Blp, p: Optional[Blp] = None) -> Blp:
    """Second half of M: ``fullcomp`` at each suitable row of ``q = p.Copied``."""
    for i in _m_rows(p, q):
        q = fullcomp(q, i)
    return q


def modify(p: Blp) -> Blp:
    """The M operation: copy, then fully complete every suitable row top-down."""
    return complete_suitable(copied(p), p)


M = modify


def e_length(p: Blp, m: int) -> int:
    """Length of ``E(p, m)`` without building it."""
    a = p.rows[-1].entries[-3]
    return (p.n - a) * 2**m + a - 1


def expand(p: Blp, m: int) -> Blp:
    """The E(m) operation on a successor- or limit-type pattern."""
    if classify(p) not in (PatternClass.SUCCESSOR, PatternClass.LIMIT):
        raise WrongType("E needs a successor or limit pattern")
    if m < 0:
        raise ValueError("m must be >= 0")
    a = p.rows[-1].entries[-3]
    q = delete(p)
    for _ in range(m):
        q = copied(q.append((a, q.n + 1, q.n + 2), 1))
    return q


E = expand


def apply_ops(p: Blp, ops: Iterable[str]) -> Blp:
    """Apply a chain like ``["del", "M", "E:1", "fullcomp:5", "comp:5:2"]``."""
    for op in ops:
        name, *args = op.strip().split(":")
        key = name.lower()
        try:
            nums = [int(x) for x in args]
        except ValueError:
            raise ParseError(f"bad arguments in {op!r}") from None
        if key == "del" and not nums:
            p = delete(p)
        elif key == "m" and not nums:
            p = modify(p)
        elif key == "copied" and not nums:
            p = copied(p)
        elif key == "e" and len(nums) == 1:
            p = expand(p, nums[0])
        elif key == "fullcomp" and len(nums) == 1:
            p = fullcomp(p, nums[0])
        elif key == "comp" and nums:
            p = comp(p, nums[0], nums[1:])
        else:
            raise ParseError(f"unknown operation {op!r}")
    return p


# -- canonical and named patterns ------------------------------------------------


def palpha(a: Ordinal) -> Blp:
    """Canonical pattern of ``a``: one row per entry of ``ps(a)``."""
    p = ZERO_BLP
    for i, t in enumerate(ps(a), 1):
        if t == 0:
            p = p.append((0, 1, 2, i + 2, i + 3), 2)
        else:
            p = p.append((0, 1, 2, t + 2, i + 2, i + 3), 3)
    return p


NAMED_FIGURES = {
    "zero": "0,1,2,-1,0,1,2,3,-1",
    "p_start": "0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,0,1,2,3,4,5,-2,2,3,4,5,6,-2",
    "p_init": "0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,0,1,2,3,4,5,-2,"
    "0,1,2,3,5,6,-3,0,1,2,3,5,6,7,-3,0,1,2,3,5,6,7,8,-3",
    "p_BO": "0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,0,1,2,3,4,5,-2,"
    "0,1,2,5,6,-2,2,5,6,7,-1,0,1,2,5,7,8,-3",
    "p_eps0": "0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,0,1,2,3,4,5,-2,"
    "0,1,2,5,6,-2,0,1,2,5,6,7,-3,5,6,7,8,-1,0,1,2,7,8,9,-3",
    "p_ep": "0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,0,1,2,3,4,5,-3,3,4,5,6,-1,0,1,2,5,6,7,-3",
    "p_omega": "0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,0,1,2,3,4,5,-3",
}


def named(name: str) -> Blp:
    try:
        return parse_figure(NAMED_FIGURES[name])
    except KeyError:
        raise UnknownName(f"unknown pattern {name!r}; known: {', '.join(NAMED_FIGURES)}") from None


def qn(n: int) -> Blp:
    """Rows 1-3 of ``p_ep`` followed by ``2**n + 1`` rows ``(0,1,2,i-1,i,i+1)``."""
    if n < 1:
        raise ValueError("qn needs n >= 1")
    p = named("p_ep").prefix(3)
    for i in range(4, 2**n + 5):
        p = p.append((0, 1, 2, i - 1, i, i + 1), 3)
    return p


# -- serialization ---------------------------------------------------------------


def format_figure(p: Blp) -> str:
    return ",".join(",".join(map(str, r.entries)) + f",-{r.step}" for r in p.rows)


def parse_figure(text: str, validated: bool = True) -> Blp:
    """Parse entries-then-negated-step encoding, e.g. ``0,1,2,-1,0,1,2,3,-1``."""
    try:
        nums = [int(x) for x in text.replace("\n", ",").split(",") if x.strip()]
    except ValueError:
        raise ParseError(f"not a list of integers: {text!r}") from None
    rows, cur = [], []
    for x in nums:
        if x < 0:
            if not cur:
                raise ParseError("step marker without entries")
            rows.append(Row(tuple(cur), -x))
            cur = []
        else:
            cur.append(x)
    if cur:
        raise ParseError("trailing entries without a step marker")
    p = Blp(tuple(rows))
    return check(p) if validated else p


def to_json(p: Blp) -> str:
    return json.dumps({"rows": [{"entries": list(r.entries), "step": r.step} for r in p.rows]})


def from_json(text: str, validated: bool = True) -> Blp:
    try:
        obj = json.loads(text)
        p = Blp(tuple(Row(tuple(int(x) for x in r["entries"]), int(r["step"])) for r in obj["rows"]))
    except (ValueError, KeyError, TypeError) as e:
        raise ParseError(f"bad pattern JSON: {e}") from None
    return check(p) if validated else p


def load_pattern(text: str) -> Blp:
    """Accept either the JSON form or the figure string."""
    return from_json(text) if text.lstrip().startswith("{") else parse_figure(text)
