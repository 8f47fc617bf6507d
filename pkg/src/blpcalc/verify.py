"""Self-check suite: figure regressions, canonical patterns, hierarchy bounds,
Laver table identities, rendering invariants and fault injection.

Each check yields a :class:`Check`; the report passes only if every check does.
"""

from __future__ import annotations

import random
from contextlib import contextmanager
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, Iterator, List, Tuple

from . import laver
from . import pattern as P
from .budget import EvalBudget
from .corpus import limit_ordinals, sample_ordinals
from .feval import f_eval, rank_canonical
from .figures import figure
from .ordinal import ONE, OMEGA, ZERO, _ps, decode_ps, fs, hardy, mh, ord_format
from .render import RenderOptions, highlighted_rows, render_ascii, render_png, render_svg


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    expected: str
    actual: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: expected {self.expected}; got {self.actual}"


@dataclass
class VerifyReport:
    checks: List[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def exit_status(self) -> int:
        return 0 if self.passed else 1

    def to_tsv(self) -> str:
        rows = ["check\tstatus\texpected\tactual"]
        for c in self.checks:
            rows.append(f"{c.name}\t{'pass' if c.passed else 'fail'}\t{c.expected}\t{c.actual}")
        return "\n".join(rows) + "\n"

    def text(self) -> str:
        return "\n".join(c.line() for c in self.checks)


def _apply(start: str, ops: str) -> str:
    # fault-injected variants may break in arbitrary ways; report, never crash
    try:
        return str(P.apply_ops(figure(start), ops.split(",")))
    except Exception as e:
        return type(e).__name__


def _eq(name: str, expected: str, actual: str) -> Check:
    return Check(name, expected == actual, expected, actual)


# -- criterion 1: figure regressions ----------------------------------------------

CHAINS: Tuple[Tuple[str, str, str, str], ...] = (
    ("1a copy_ex1", "copy_ex1_p", "copied", "copy_ex1_copied"),
    ("1a copy_ex2", "copy_ex2_p", "copied", "copy_ex2_copied"),
    ("1b fullcomp", "comp_p", "fullcomp:5", "comp_result"),
    ("1c E(2)", "e_op_p", "E:2", "e_op_result"),
    ("1d M.M", "bls_j_prime", "M,M", "bls_after_m"),
    ("1e p_prime chain", "p_start", "del,M,M,M,M,E:1,E:1,E:1", "p_prime"),
    ("1f p_BO chain", "p_init", "del,del,E:1,M,del,M,del,del,E:1,M,del,del", "p_BO"),
    ("1f p_eps0 chain", "p_BO", "del,M,M,del", "p_eps0"),
)


def figure_checks() -> List[Check]:
    out = [_eq(name, str(figure(want)), _apply(start, ops)) for name, start, ops, want in CHAINS]
    out.append(_eq("1a copy_ex2 result not copyable", "NotCopyable", _apply("copy_ex2_copied", "copied")))
    return out


# -- criterion 2: canonical patterns ------------------------------------------------


def canonical_checks() -> List[Check]:
    from .pattern import expand, palpha

    out = [
        _eq("2 palpha(w)", str(figure("p_omega")), str(palpha(OMEGA))),
        _eq("2 palpha(w+2)", str(figure("p_prime")), str(palpha(OMEGA.succ().succ()))),
    ]
    sample = sample_ordinals()
    bad = [ord_format(a) for a in sample if P.delete(palpha(a.succ())) != palpha(a)]
    out.append(_eq("2 palpha(a+1).del = palpha(a)", "[]", str(bad)))
    bad = [
        f"{ord_format(a)},{m}"
        for a in limit_ordinals()
        for m in range(4)
        if expand(palpha(a), m) != palpha(fs(a, 2**m))
    ]
    out.append(_eq("2 E(palpha(a),m) = palpha(a[2^m])", "[]", str(bad)))
    bad = [ord_format(a) for a in sample if rank_canonical(palpha(a)) != a]
    out.append(_eq("2 rank_canonical . palpha = id", "[]", str(bad)))
    return out


# -- criterion 3: pattern sequences --------------------------------------------------


def ps_checks() -> List[Check]:
    sample = sample_ordinals()
    bad1 = [ord_format(a) for a in sample if (len(_ps(a)) == 0) != a.is_zero()]
    bad2 = [ord_format(a) for a in sample if any(not 0 <= u < i for i, u in enumerate(_ps(a), 1))]
    bad3 = []
    for a in sample:
        s = _ps(a)
        if a.is_zero():
            continue
        if (s[-1] == 0) != a.is_successor() or (a.is_successor() and s[:-1] != _ps(a.pred())):
            bad3.append(ord_format(a))
    bad4 = [
        f"{ord_format(a)},{n}"
        for a in limit_ordinals()
        for n in range(1, 5)
        if _ps(fs(a, n + 1))[: len(_ps(fs(a, n)))] != _ps(fs(a, n))
    ]
    bad5 = [ord_format(a) for a in sample if decode_ps(_ps(a)) != a]
    return [
        _eq("3 ps empty iff zero", "[]", str(bad1)),
        _eq("3 ps entries u_i < i", "[]", str(bad2)),
        _eq("3 ps successor shape", "[]", str(bad3)),
        _eq("3 ps initial segments", "[]", str(bad4)),
        _eq("3 decode_ps round trip", "[]", str(bad5)),
    ]


# -- criterion 4: f values ------------------------------------------------------------


def f_checks() -> List[Check]:
    from .pattern import ZERO_BLP, palpha

    bad = []
    for m in range(1, 21):
        r = f_eval(ZERO_BLP, m)
        if not (r.ok and r.value == m * 2**m):
            bad.append(m)
    out = [_eq("4 f(zero,m) = m*2^m, m<=20", "[]", str(bad))]
    r = f_eval(palpha(ONE), 1)
    out.append(_eq("4 f(palpha(1),1)", "Value(value=8)", str(r)))
    m12 = mh(ONE, 2)
    out.append(_eq("4 2^f(palpha(1),1) = m(1,2)", "True", str(r.ok and m12.ok and 2**r.value == m12.value)))
    bad = []
    for n in range(1, 5):
        a, b = f_eval(palpha(ZERO), n), mh(ZERO, 2**n)
        if not (a.ok and b.ok and 2**a.value == b.value):
            bad.append(n)
    out.append(_eq("4 2^f(palpha(0),n) = m(0,2^n), n<=4", "[]", str(bad)))
    return out


# -- criterion 5: hierarchy inequalities --------------------------------------------

HIER_BUDGET = EvalBudget(max_bits=1 << 16, max_steps=10**5)


def hierarchy_pairs(budget: EvalBudget = HIER_BUDGET) -> Tuple[int, int, List[str]]:
    """(feasible, skipped, violations) over the sample and n in 2..30."""
    feasible = skipped = 0
    bad: List[str] = []
    for a in sample_ordinals():
        for n in range(2, 31):
            m0, m1 = mh(a, n, budget), mh(a, n + 1, budget)
            h = hardy(a, n, budget) if m0.ok and m1.ok else None
            if h is None or not h.ok:
                skipped += 1
                continue
            feasible += 1
            if not (m1.value >= h.value and m1.value > m0.value >= n + 1):
                bad.append(f"{ord_format(a)},{n}")
    return feasible, skipped, bad


def hierarchy_checks() -> List[Check]:
    feasible, skipped, bad = hierarchy_pairs()
    return [
        _eq("5 m(a,n+1) >= H_a(n) and m(a,n+1) > m(a,n) >= n+1", "[]", str(bad)),
        Check("5 feasible pairs >= 20", feasible >= 20, ">= 20", f"{feasible} feasible, {skipped} skipped"),
    ]


# -- criterion 6: Laver tables ----------------------------------------------------------


def laver_checks(samples: int = 10**5, seed: int = 0) -> List[Check]:
    out = [
        _eq("6 F1(0)", "Value(value=1)", str(laver.f1(0))),
        _eq("6 F1(1)", "Value(value=4)", str(laver.f1(1))),
    ]
    r = laver.f1(2)
    out.append(Check("6 F1(2) exceeds default budget", not r.ok, "Exceeded", str(r)))
    bad = []
    for n in range(6):
        t = laver.table(n)
        N = len(t)
        for a in range(1, N + 1):
            ra = t[a - 1]
            for b in range(1, N + 1):
                rab = t[ra[b - 1] - 1]
                rb = t[b - 1]
                if any(ra[rb[c] - 1] != rab[ra[c] - 1] for c in range(N)):
                    bad.append((n, a, b))
    out.append(_eq("6 left self-distributivity n<=5", "[]", str(bad)))
    rng = random.Random(seed)
    bad = []
    for n in (6, 7, 8):
        tab = laver.laver_table(n)
        N = tab.size
        st = tab.star
        for _ in range(samples):
            a, b, c = rng.randint(1, N), rng.randint(1, N), rng.randint(1, N)
            if st(a, st(b, c)) != st(st(a, b), st(a, c)):
                bad.append((n, a, b, c))
    out.append(_eq(f"6 left self-distributivity sampled n=6..8 ({samples} each)", "[]", str(bad)))
    periods = [laver.period(n, 1) for n in range(10)]
    out.append(_eq("6 row-1 periods n=0..9", "[1, 1, 2, 4, 4, 8, 8, 8, 8, 16]", str(periods)))
    bad = []
    for n in range(9):
        N = 1 << n
        for b in range(1, N + 1):
            if laver.star(n, N, b) != b:
                bad.append(("id", n, b))
        for a in range(1, N):
            if laver.star(n, a, 1) != a + 1:
                bad.append(("succ", n, a))
    out.append(_eq("6 2^n*b = b and a*1 = a+1, n<=8", "[]", str(bad)))
    return out


# -- criterion 7: rendering -----------------------------------------------------------------

RENDER_CASES = (("zero", False), ("copy_ex1_p", True), ("p_init", False))


def render_checks() -> List[Check]:
    out = []
    for name, hl in RENDER_CASES:
        p = figure(name)
        opts = RenderOptions("svg", hl)
        svg = render_svg(p, opts)
        out.append(_eq(f"7 {name} circle count", str(p.entry_count()), str(svg.count("<circle"))))
        marked = highlighted_rows(p, opts)
        want = sum(len(p.rows[i - 1]) for i in marked)
        out.append(_eq(f"7 {name} highlighted circles", str(want), str(svg.count('fill="#66CCFF"'))))
        text = render_ascii(p, RenderOptions("ascii", hl))
        same = text == render_ascii(p, RenderOptions("ascii", hl)) and svg == render_svg(p, opts)
        out.append(_eq(f"7 {name} deterministic", "True", str(same)))
    return out


# -- criterion 8: fault injection ------------------------------------------------------------


def _rows_of_p(p, q):
    return [i for i in range(p.n, 0, -1) if p.rows[i - 1].suitable]


def _literal_step_row(i, r):
    return i + r - 1


def _x0_when_empty(xs):
    return xs[1:-1] or xs[:1]


def _shift_off_by_one(t, x, hi):
    return t[-1] + x - hi


FAULTS: Dict[str, Tuple[str, Callable]] = {
    "m-row-source": ("_m_rows", _rows_of_p),
    "comp-step-index": ("_interp_step_row", _literal_step_row),
    "empty-T": ("_completion_set", _x0_when_empty),
    "ap-third-clause": ("_ap_shift", _shift_off_by_one),
}


@contextmanager
def fault(name: str) -> Iterator[None]:
    """Temporarily swap one semantic choice in :mod:`blpcalc.pattern`."""
    attr, repl = FAULTS[name]
    orig = getattr(P, attr)
    setattr(P, attr, repl)
    try:
        yield
    finally:
        setattr(P, attr, orig)


def fault_checks() -> List[Check]:
    baseline = {c.name for c in figure_checks() if not c.passed}
    out = []
    for name in FAULTS:
        with fault(name):
            broken = [c.name for c in figure_checks() if not c.passed and c.name not in baseline]
        out.append(Check(f"8 fault {name} detected", bool(broken), "a figure check fails", ", ".join(broken) or "none"))
    return out


SUITES = (
    figure_checks,
    canonical_checks,
    ps_checks,
    f_checks,
    hierarchy_checks,
    laver_checks,
    render_checks,
    fault_checks,
)


def run_verify() -> VerifyReport:
    report = VerifyReport()
    for suite in SUITES:
        report.checks.extend(suite())
    return report


def write_report(report: VerifyReport, out_dir) -> List[Path]:
    """Write ``verify.tsv`` plus staircase and period figures into ``out_dir``."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    tsv = out / "verify.tsv"
    tsv.write_text(report.to_tsv())
    written = [tsv]
    for name in ("p_start", "p_init", "p_BO", "p_eps0", "p_omega", "p_prime", "copy_ex1_p"):
        written.append(render_png(figure(name), out / f"{name}.png", RenderOptions("png", True)))
    written.append(_period_plot(out / "laver_periods.png"))
    return written


def _period_plot(path: Path) -> Path:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ns = list(range(10))
    periods = [laver.period(n, 1) for n in ns]
    fig, ax = plt.subplots(figsize=(5, 3.2))
    ax.step(ns, periods, where="mid", marker="o")
    ax.set_yscale("log", base=2)
    ax.set_xlabel("n (table order 2^n)")
    ax.set_ylabel("period of row 1")
    fig.tight_layout()
    fig.savefig(path, dpi=100, metadata={"Software": None})
    plt.close(fig)
    return path
