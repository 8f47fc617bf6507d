"""Basic Laver patterns, ordinal notations below epsilon_0, fast-growing
hierarchies and Laver table arithmetic."""

from .budget import EvalBudget, Exceeded, Value
from .feval import f_eval, f_trace, rank_canonical
from .laver import LaverTable, compose_index, f1, period, star
from .ordinal import EPS0, OMEGA, ONE, ZERO, Ordinal, decode_ps, fs, hardy, mh, ord_format, ord_parse, ps
from .pattern import (
    Blp,
    Row,
    apply_ops,
    classify,
    comp,
    copied,
    delete,
    expand,
    fullcomp,
    modify,
    named,
    palpha,
    parse_figure,
    qn,
)

__all__ = [
    "Blp",
    "EPS0",
    "EvalBudget",
    "Exceeded",
    "LaverTable",
    "OMEGA",
    "ONE",
    "Ordinal",
    "Row",
    "Value",
    "ZERO",
    "apply_ops",
    "classify",
    "comp",
    "compose_index",
    "copied",
    "decode_ps",
    "delete",
    "expand",
    "f1",
    "f_eval",
    "f_trace",
    "fs",
    "fullcomp",
    "hardy",
    "mh",
    "modify",
    "named",
    "ord_format",
    "ord_parse",
    "palpha",
    "parse_figure",
    "period",
    "ps",
    "qn",
    "rank_canonical",
    "star",
]

__version__ = "0.1.0"
