"""Ordinals below epsilon_0 in Cantor normal form.

Besides comparison and the text grammar this module provides the standard
fundamental sequences, pattern sequences (the integer encoding used to build
canonical patterns), and the Hardy and iterated-power hierarchies evaluated
under an :class:`~blpcalc.budget.EvalBudget`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache, total_ordering
from typing import Iterable, Tuple, Union

from .budget import EvalBudget, EvalResult, Meter, run_metered
from .errors import NotCNF, NotInImage, ParseError, ZeroOrdinal


@total_ordering
class Ordinal:
    """``sum(omega**e * c for e, c in terms)`` with exponents strictly descending."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Iterable[Tuple["Ordinal", int]] = ()):
        terms = tuple((e, int(c)) for e, c in terms)
        for k, (e, c) in enumerate(terms):
            if not isinstance(e, Ordinal):
                raise TypeError(f"exponent must be an Ordinal, got {e!r}")
            if c < 1:
                raise NotCNF(f"coefficient {c} < 1")
            if k and not ord_cmp(terms[k - 1][0], e) > 0:
                raise NotCNF("exponents must be strictly descending")
        self.terms = terms
        self._hash = hash(terms)

    @classmethod
    def nat(cls, k: int) -> "Ordinal":
        if k < 0:
            raise ValueError("negative ordinal")
        return ZERO if k == 0 else cls(((ZERO, k),))

    @classmethod
    def omega_pow(cls, e: Union["Ordinal", int], c: int = 1) -> "Ordinal":
        if isinstance(e, int):
            e = cls.nat(e)
        return cls(((e, c),))

    def is_zero(self) -> bool:
        return not self.terms

    def is_successor(self) -> bool:
        return bool(self.terms) and self.terms[-1][0].is_zero()

    def is_limit(self) -> bool:
        return bool(self.terms) and not self.terms[-1][0].is_zero()

    def is_finite(self) -> bool:
        return all(e.is_zero() for e, _ in self.terms)

    def __int__(self) -> int:
        if not self.is_finite():
            raise ValueError(f"{self} is infinite")
        return self.terms[0][1] if self.terms else 0

    def pred(self) -> "Ordinal":
        if not self.is_successor():
            raise ValueError(f"{self} is not a successor")
        return tail_decompose(self)[0]

    def succ(self) -> "Ordinal":
        return plus_omega_pow(self, ZERO)

    def __eq__(self, other):
        if isinstance(other, Ordinal):
            return self.terms == other.terms
        if isinstance(other, int):
            return self.is_finite() and int(self) == other
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, Eps0Token):
            return True
        if isinstance(other, int):
            other = Ordinal.nat(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return ord_cmp(self, other) < 0

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Ordinal({ord_format(self)!r})"

    def __str__(self):
        return ord_format(self)


@total_ordering
class Eps0Token:
    """The ordinal epsilon_0 itself; only the Hardy hierarchy accepts it."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return isinstance(other, Eps0Token)

    def __lt__(self, other):
        if isinstance(other, (Ordinal, int)):
            return False
        return NotImplemented

    def __hash__(self):
        return hash("eps0")

    def __repr__(self):
        return "EPS0"

    __str__ = lambda self: "e0"  # noqa: E731


ZERO = Ordinal.__new__(Ordinal)
ZERO.terms = ()
ZERO._hash = hash(())
ONE = Ordinal(((ZERO, 1),))
OMEGA = Ordinal(((ONE, 1),))
EPS0 = Eps0Token()


def ord_cmp(a: Ordinal, b: Ordinal) -> int:
    """Return -1, 0 or 1 comparing two CNF ordinals."""
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        c = ord_cmp(ea, eb)
        if c:
            return c
        if ca != cb:
            return -1 if ca < cb else 1
    la, lb = len(a.terms), len(b.terms)
    return (la > lb) - (la < lb)


def plus_omega_pow(beta: Ordinal, gamma: Ordinal, c: int = 1) -> Ordinal:
    """``beta + omega**gamma * c`` when ``gamma`` does not exceed beta's last exponent."""
    if c == 0:
        return beta
    if not beta.terms:
        return Ordinal(((gamma, c),))
    e_last, c_last = beta.terms[-1]
    k = ord_cmp(e_last, gamma)
    if k == 0:
        return Ordinal(beta.terms[:-1] + ((gamma, c_last + c),))
    if k < 0:
        raise NotCNF("absorbing addition is not supported")
    return Ordinal(beta.terms + ((gamma, c),))


def tail_decompose(a: Ordinal) -> Tuple[Ordinal, Ordinal]:
    """Split ``a = b + omega**g`` by peeling one unit off the least term."""
    if a.is_zero():
        raise ZeroOrdinal("0 has no tail decomposition")
    g, c = a.terms[-1]
    head = a.terms[:-1] + (((g, c - 1),) if c > 1 else ())
    return Ordinal(head), g


def fs(a: Ordinal, n: int) -> Ordinal:
    """Fundamental sequence ``a[n]``; for a successor ``b+1`` this returns ``b``."""
    b, g = tail_decompose(a)
    if g.is_zero():
        return b
    if g.is_successor():
        return plus_omega_pow(b, g.pred(), n)
    return plus_omega_pow(b, fs(g, n))


def eps0_fs(k: int) -> Ordinal:
    a = ONE
    for _ in range(k):
        a = Ordinal.omega_pow(a)
    return a


# -- pattern sequences -------------------------------------------------------


@dataclass(frozen=True)
class PatternSeq:
    entries: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        for i, u in enumerate(self.entries, 1):
            if not 0 <= u < i:
                raise NotInImage(f"entry {u} at position {i} violates 0 <= u_i < i")

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, k):
        return self.entries[k]

    def __str__(self):
        return ",".join(map(str, self.entries))

    @classmethod
    def parse(cls, text: str) -> "PatternSeq":
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls(tuple(int(x) for x in text.split(",")))
        except ValueError as e:
            raise ParseError(str(e)) from None


@lru_cache(maxsize=4096)
def _ps(a: Ordinal) -> Tuple[int, ...]:
    out: list = []
    for g, c in a.terms:
        for _ in range(c):
            shift = len(out) + 1
            out.append(0)
            if g.is_zero():
                continue
            if g.is_successor():
                out.extend(t + shift for t in _ps(g.pred()))
                out.append(shift)
            else:
                out.extend(t + shift for t in _ps(g))
    return tuple(out)


def ps(a: Ordinal) -> PatternSeq:
    """Pattern sequence of ``a``.

    ``ps(b+1) = ps(b)+(0,)``; for ``b + w^(d+1)`` the block appended is
    ``0, ps(d) shifted, shift``; for ``b + w^g`` with ``g`` a limit it is
    ``0, ps(g) shifted`` with no trailing marker.
    """
    return PatternSeq(_ps(a))


def _decode(s: Tuple[int, ...]) -> Ordinal:
    if not s:
        return ZERO
    if s[0] != 0:
        raise NotInImage(f"{s} does not start with 0")
    starts = [i for i, u in enumerate(s) if u == 0] + [len(s)]
    out = ZERO
    for lo, hi in zip(starts, starts[1:]):
        shift = lo + 1
        rest = tuple(u - shift for u in s[lo + 1:hi])
        if any(u < 0 for u in rest):
            raise NotInImage(f"{s} is not a pattern sequence")
        try:
            out = plus_omega_pow(out, _decode(rest))
        except NotCNF:
            raise NotInImage(f"{s} decodes to a non-normal-form sum") from None
    return out


def decode_ps(s: Union[PatternSeq, Iterable[int]]) -> Ordinal:
    """Inverse of :func:`ps`; raises :class:`NotInImage` outside its image."""
    s = tuple(s)
    a = _decode(s)
    if _ps(a) != s:
        raise NotInImage(f"{s} is not ps of any ordinal")
    return a


# -- hierarchies -----------------------------------------------------------------


def _hardy(meter: Meter, a, n: int) -> int:
    if isinstance(a, Eps0Token):
        meter.tick()
        a, n = eps0_fs(n), n + 1
    while not a.is_zero():
        meter.tick()
        a = a.pred() if a.is_successor() else fs(a, n)
        n += 1
    return meter.check(n)


def hardy(a: Union[Ordinal, Eps0Token], n: int, budget: EvalBudget | None = None) -> EvalResult:
    """Hardy hierarchy ``H_a(n)``; ``a`` may be :data:`EPS0`."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return run_metered(_hardy, budget, a, n)


def _power_self(meter: Meter, x: int) -> int:
    # bit_length(x**x) >= x*(bit_length(x)-1)+1
    meter.need_bits(x * (x.bit_length() - 1) + 1)
    return meter.check(x**x)


def _mh(meter: Meter, a: Ordinal, n: int) -> int:
    # frames hold [predecessor, iterations still to run]
    stack: list = []
    alpha, arg = a, n
    calling = True
    val = 0
    while True:
        if calling:
            meter.tick()
            # m(alpha, x) >= x**x for every alpha, so oversize arguments fail fast
            meter.need_bits(arg * (arg.bit_length() - 1) + 1)
            if not alpha.is_zero():
                # alpha >= 1 gives m(alpha, x) >= m(0, .) iterated x times at x
                y = arg
                for _ in range(arg):
                    meter.need_bits(y * (y.bit_length() - 1) + 1)
                    y = y**y
            while alpha.is_limit():
                alpha = fs(alpha, arg)
            if alpha.is_zero():
                val = _power_self(meter, arg)
            else:
                meter.need_steps(arg)
                stack.append([alpha.pred(), arg])
                val = arg
            calling = False
            continue
        if not stack:
            return val
        top = stack[-1]
        if top[1] == 0:
            stack.pop()
            continue
        top[1] -= 1
        alpha, arg = top[0], val
        calling = True


def mh(a: Ordinal, n: int, budget: EvalBudget | None = None) -> EvalResult:
    """``m(0,n) = n**n``, ``m(a+1,n)`` = n-fold iterate of ``m(a,.)`` at n, ``m(l,n) = m(l[n],n)``."""
    if isinstance(a, Eps0Token):
        raise ValueError("the m-hierarchy is only defined below epsilon_0")
    if n < 2:
        raise ValueError("n must be >= 2")
    return run_metered(_mh, budget, a, n)


def steinhaus_moser(a: Ordinal, n: int, budget: EvalBudget | None = None) -> EvalResult:
    """``m_a(n)``; coincides with :func:`mh` because ``w[n] = n``."""
    return mh(a, n, budget)


# -- text form -------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([wω])|(\S))")


def _tokens(text: str):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            break
        num, w, sym = m.groups()
        out.append(("nat", int(num)) if num else ("w", None) if w else (sym, None))
        pos = m.end()
    out.append(("end", None))
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokens(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i][0]

    def take(self, kind):
        tok = self.toks[self.i]
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[0]!r}")
        self.i += 1
        return tok[1]

    def ordinal(self) -> Ordinal:
        terms = [self.term()]
        while self.peek() == "+":
            self.take("+")
            terms.append(self.term())
        if len(terms) == 1 and terms[0] is None:
            return ZERO
        if any(t is None for t in terms):
            raise NotCNF("0 may only appear on its own")
        return Ordinal(terms)

    def term(self):
        if self.peek() == "nat":
            k = self.take("nat")
            return (ZERO, k) if k else None
        self.take("w")
        e = ONE
        if self.peek() == "^":
            self.take("^")
            if self.peek() == "nat":
                e = Ordinal.nat(self.take("nat"))
            elif self.peek() == "w":
                self.take("w")
                e = OMEGA
            else:
                self.take("(")
                e = self.ordinal()
                self.take(")")
        c = 1
        if self.peek() == "*":
            self.take("*")
            c = self.take("nat")
            if c < 1:
                raise NotCNF("coefficient must be >= 1")
        return (e, c)


def ord_parse(text: str) -> Ordinal:
    """Parse ``w^w*2+w+3`` style text; non-CNF sums raise :class:`NotCNF`."""
    p = _Parser(text)
    a = p.ordinal()
    p.take("end")
    return a


def parse_hardy_index(text: str) -> Union[Ordinal, Eps0Token]:
    if text.strip().lower() in ("e0", "eps0", "ε0", "ε₀"):
        return EPS0
    return ord_parse(text)


def _format_exp(e: Ordinal) -> str:
    if e.is_finite() or e == OMEGA:
        return ord_format(e)
    return f"({ord_format(e)})"


def ord_format(a: Ordinal) -> str:
    if a.is_zero():
        return "0"
    parts = []
    for e, c in a.terms:
        if e.is_zero():
            parts.append(str(c))
            continue
        s = "w" if e == ONE else f"w^{_format_exp(e)}"
        parts.append(s if c == 1 else f"{s}*{c}")
    return "+".join(parts)
