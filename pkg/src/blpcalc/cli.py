"""``blpcalc`` command-line front end.

Exit status is 0 on success, 1 on a domain error or an exhausted budget (the
error name goes to stderr), and 2 on usage errors.  ``--json`` wraps every
result as ``{"ok": ..., "value": ..., "error": ...}``.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from . import laver
from .budget import DEFAULT_MAX_BITS, DEFAULT_MAX_STEPS, BudgetExceeded, EvalBudget, Exceeded
from .errors import BlpError
from .feval import f_eval, f_trace, fire, format_trace, rank_canonical
from .figures import FIGURES, figure
from .ordinal import (
    PatternSeq,
    decode_ps,
    fs,
    hardy,
    mh,
    ord_cmp,
    ord_format,
    ord_parse,
    parse_hardy_index,
    ps,
)
from .pattern import (
    NAMED_FIGURES,
    Blp,
    apply_ops,
    classify,
    load_pattern,
    palpha,
    parse_figure,
    from_json,
    to_json,
    validate,
)
from .render import RenderOptions, render, render_png


class UsageError(Exception):
    pass


class Failed(Exception):
    """A computation ran out of budget; carries the :class:`Exceeded` record."""

    def __init__(self, result: Exceeded):
        super().__init__(f"budget exceeded ({result.reason}) after {result.steps_done} steps")
        self.result = result


# -- configuration ---------------------------------------------------------------------

CONFIG_KEYS = {"max_bits", "max_steps"}


def read_config(path: str) -> Dict[str, int]:
    """Parse a ``key = value`` file; ``#`` starts a comment."""
    out: Dict[str, int] = {}
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as e:
        raise UsageError(f"cannot read config {path}: {e.strerror}") from None
    for n, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, val = line.partition("=")
        key = key.strip().replace("-", "_")
        if not sep or key not in CONFIG_KEYS:
            raise UsageError(f"{path}:{n}: expected one of {sorted(CONFIG_KEYS)} = <int>")
        try:
            out[key] = int(val.strip())
        except ValueError:
            raise UsageError(f"{path}:{n}: {val.strip()!r} is not an integer") from None
    return out


def budget_from(args) -> EvalBudget:
    conf = read_config(args.config) if args.config else {}
    bits = args.max_bits if args.max_bits is not None else conf.get("max_bits", DEFAULT_MAX_BITS)
    steps = args.max_steps if args.max_steps is not None else conf.get("max_steps", DEFAULT_MAX_STEPS)
    try:
        return EvalBudget(max_bits=bits, max_steps=steps)
    except ValueError as e:
        raise UsageError(str(e)) from None


# -- inputs ------------------------------------------------------------------------------


def pattern_from(args, validated: bool = True) -> Blp:
    if args.name:
        text = FIGURES.get(args.name) or NAMED_FIGURES.get(args.name)
        if text is None or validated:
            return figure(args.name)
        return parse_figure(text, False)
    if args.figure:
        return parse_figure(args.figure, validated)
    text = Path(args.file).read_text() if args.file != "-" else sys.stdin.read()
    if not validated:
        return from_json(text, False) if text.lstrip().startswith("{") else parse_figure(text, False)
    return load_pattern(text)


def add_pattern_source(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--name", help="named pattern, e.g. p_start or copy_ex1_p")
    g.add_argument("--figure", help="figure string, e.g. 0,1,2,-1,0,1,2,3,-1")
    g.add_argument("--file", help="file with a figure string or JSON pattern ('-' for stdin)")


def pattern_out(p: Blp, fmt: str) -> Any:
    return json.loads(to_json(p)) if fmt == "json" else str(p)


def value_of(result) -> int:
    if isinstance(result, Exceeded):
        raise Failed(result)
    return result.value


# -- handlers --------------------------------------------------------------------------------


def cmd_blp_validate(args):
    bad = validate(pattern_from(args, validated=False))
    if bad:
        from .errors import InvalidPattern

        raise InvalidPattern(bad)
    return "ok"


def cmd_blp_apply(args):
    ops = [o for o in args.ops.split(",") if o.strip()]
    return pattern_out(apply_ops(pattern_from(args), ops), args.output)


def cmd_blp_classify(args):
    p = pattern_from(args)
    return {"class": classify(p).value, "case": fire(p).value} if args.json else f"class={classify(p).value} case={fire(p).value}"


def cmd_blp_canonical(args):
    return pattern_out(palpha(ord_parse(args.alpha)), args.output)


def cmd_blp_render(args):
    p = pattern_from(args)
    opts = RenderOptions(args.format, args.highlight, args.cell_width)
    if args.format == "png":
        if not args.out:
            raise UsageError("png output needs --out")
        return str(render_png(p, args.out, opts))
    text = render(p, opts)
    if args.out:
        Path(args.out).write_text(text if text.endswith("\n") else text + "\n")
        return args.out
    return text


def cmd_ord_ps(args):
    return str(ps(ord_parse(args.alpha)))


def cmd_ord_fs(args):
    return ord_format(fs(ord_parse(args.alpha), args.n))


def cmd_ord_decode(args):
    return ord_format(decode_ps(PatternSeq.parse(args.seq)))


def cmd_ord_cmp(args):
    return ord_cmp(ord_parse(args.a), ord_parse(args.b))


def cmd_hier_hardy(args):
    return str(value_of(hardy(parse_hardy_index(args.alpha), args.n, budget_from(args))))


def cmd_hier_m(args):
    return str(value_of(mh(ord_parse(args.alpha), args.n, budget_from(args))))


def cmd_f_eval(args):
    return str(value_of(f_eval(pattern_from(args), args.m, budget_from(args))))


def cmd_f_trace(args):
    steps = f_trace(pattern_from(args), args.m, args.limit)
    if args.json:
        return [{"index": s.index, "case": s.case.value, "n": s.pattern_length, "note": s.note} for s in steps]
    return format_trace(steps)


def cmd_f_rank(args):
    r = rank_canonical(pattern_from(args))
    return None if r is None and args.json else ("unrecognized" if r is None else ord_format(r))


def _laver(fn, *a, budget: EvalBudget):
    try:
        return fn(*a, budget=budget)
    except BudgetExceeded as e:
        raise Failed(Exceeded(e.reason, 0)) from None


def cmd_laver_star(args):
    return _laver(laver.star, args.n, args.a, args.b, budget=budget_from(args))


def cmd_laver_table(args):
    rows = _laver(laver.table, args.n, budget=budget_from(args))
    return rows if args.json else laver.format_table(rows)


def cmd_laver_period(args):
    return _laver(laver.period, args.n, args.a, budget=budget_from(args))


def cmd_laver_compose(args):
    return _laver(laver.compose_index, args.n, args.a, args.b, budget=budget_from(args))


def cmd_laver_f1(args):
    return value_of(laver.f1(args.n, budget_from(args)))


def cmd_verify(args):
    from .verify import run_verify, write_report

    report = run_verify()
    if args.report:
        write_report(report, args.report)
    args._status = report.exit_status
    if args.json:
        return [c.__dict__ for c in report.checks]
    return report.text()


# -- parser ------------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    def global_flags(default):
        # subcommands repeat these flags with suppressed defaults so that a
        # flag given before the subcommand is not overwritten
        g = argparse.ArgumentParser(add_help=False)
        g.add_argument("--json", action="store_true", default=default(False), help="emit {ok, value, error} JSON")
        g.add_argument("--max-bits", type=int, default=default(None), help=f"bit cap (default {DEFAULT_MAX_BITS})")
        g.add_argument("--max-steps", type=int, default=default(None), help=f"step cap (default {DEFAULT_MAX_STEPS})")
        g.add_argument("--config", default=default(None), help="key=value file with max_bits / max_steps defaults")
        return g

    top = global_flags(lambda v: v)
    common = global_flags(lambda v: argparse.SUPPRESS)
    parser = argparse.ArgumentParser(prog="blpcalc", description="Calculator for basic Laver patterns and the ordinals they encode.", parents=[top])
    groups = parser.add_subparsers(dest="group", required=True)

    def sub(group, name, fn, help_):
        p = group.add_parser(name, help=help_, parents=[common])
        p.set_defaults(fn=fn)
        return p

    blp = groups.add_parser("blp", help="basic Laver patterns").add_subparsers(dest="cmd", required=True)
    p = sub(blp, "validate", cmd_blp_validate, "check the pattern conditions")
    add_pattern_source(p)
    p = sub(blp, "apply", cmd_blp_apply, "apply operations such as del,M,E:1,fullcomp:5")
    add_pattern_source(p)
    p.add_argument("--ops", required=True)
    p.add_argument("--output", choices=("figure", "json"), default="figure")
    p = sub(blp, "classify", cmd_blp_classify, "zero / successor / limit / transient")
    add_pattern_source(p)
    p = sub(blp, "canonical", cmd_blp_canonical, "canonical pattern of an ordinal")
    p.add_argument("--alpha", required=True)
    p.add_argument("--output", choices=("figure", "json"), default="figure")
    p = sub(blp, "render", cmd_blp_render, "draw the staircase diagram")
    add_pattern_source(p)
    p.add_argument("--format", choices=("ascii", "svg", "png"), default="ascii")
    p.add_argument("--highlight", action="store_true", help="mark the rows Copied would duplicate")
    p.add_argument("--cell-width", type=int, default=2)
    p.add_argument("--out", help="output file (required for png)")

    ordg = groups.add_parser("ord", help="ordinals below epsilon_0").add_subparsers(dest="cmd", required=True)
    p = sub(ordg, "ps", cmd_ord_ps, "pattern sequence")
    p.add_argument("--alpha", required=True)
    p = sub(ordg, "fs", cmd_ord_fs, "fundamental sequence a[n]")
    p.add_argument("--alpha", required=True)
    p.add_argument("-n", type=int, required=True)
    p = sub(ordg, "decode", cmd_ord_decode, "ordinal with a given pattern sequence")
    p.add_argument("--seq", required=True)
    p = sub(ordg, "cmp", cmd_ord_cmp, "compare two ordinals (-1, 0, 1)")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)

    hier = groups.add_parser("hier", help="fast-growing hierarchies").add_subparsers(dest="cmd", required=True)
    p = sub(hier, "hardy", cmd_hier_hardy, "Hardy hierarchy H_a(n); a may be e0")
    p.add_argument("--alpha", required=True)
    p.add_argument("-n", type=int, required=True)
    p = sub(hier, "m", cmd_hier_m, "m-hierarchy m(a, n)")
    p.add_argument("--alpha", required=True)
    p.add_argument("-n", type=int, required=True)

    fg = groups.add_parser("f", help="the pattern estimator f(p, m)").add_subparsers(dest="cmd", required=True)
    p = sub(fg, "eval", cmd_f_eval, "evaluate f(p, m)")
    add_pattern_source(p)
    p.add_argument("-m", type=int, required=True)
    p = sub(fg, "trace", cmd_f_trace, "clauses fired while reducing f(p, m)")
    add_pattern_source(p)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--limit", type=int, default=1000)
    p = sub(fg, "rank", cmd_f_rank, "ordinal of a canonical pattern")
    add_pattern_source(p)

    lv = groups.add_parser("laver", help="Laver tables").add_subparsers(dest="cmd", required=True)
    p = sub(lv, "star", cmd_laver_star, "a * b in the table of order 2^n")
    for k in ("-n", "-a", "-b"):
        p.add_argument(k, type=int, required=True)
    p = sub(lv, "table", cmd_laver_table, "print the whole table")
    p.add_argument("-n", type=int, required=True)
    p = sub(lv, "period", cmd_laver_period, "period of row a")
    for k in ("-n", "-a"):
        p.add_argument(k, type=int, required=True)
    p = sub(lv, "compose", cmd_laver_compose, "least c with c*x = a*(b*x)")
    for k in ("-n", "-a", "-b"):
        p.add_argument(k, type=int, required=True)
    p = sub(lv, "f1", cmd_laver_f1, "the F1 procedure")
    p.add_argument("-n", type=int, required=True)

    p = groups.add_parser("verify", help="run the self-check suite", parents=[common])
    p.set_defaults(fn=cmd_verify)
    p.add_argument("--report", metavar="DIR", help="write verify.tsv and PNG figures to DIR")
    return parser


def _emit(args, ok: bool, value: Any, error: Optional[str], message: str = "") -> None:
    if args.json:
        print(json.dumps({"ok": ok, "value": value, "error": error}))
    elif ok and value is not None:
        print(json.dumps(value) if isinstance(value, (dict, list)) else value)
    if not ok:
        print(f"error: {error}: {message}" if message else f"error: {error}", file=sys.stderr)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        value = args.fn(args)
    except UsageError as e:
        parser.error(str(e))
    except Failed as e:
        _emit(args, False, None, "Exceeded", str(e))
        return 1
    except (BlpError, ValueError, OSError) as e:
        _emit(args, False, None, type(e).__name__, str(e))
        return 1
    status = getattr(args, "_status", 0)
    if status:
        _emit(args, False, value, "VerifyFailed", "some checks failed")
        if not args.json:
            print(value)
        return status
    _emit(args, True, value, None)
    return 0


if __name__ == "__main__":
    sys.exit(main())
