"""The ordinal sample used by the property checks."""

from __future__ import annotations

from itertools import combinations, product
from typing import List

from .ordinal import Ordinal, ord_parse

EXTRA = ("w^w", "w^(w^w)", "w^(w+1)", "w^w*2+w", "w^(w*2)", "w^(w^2)+w^w+1")


def sample_ordinals() -> List[Ordinal]:
    """CNF ordinals with at most three terms, finite exponents and coefficients
    up to 3, plus a few with transfinite exponents; sorted ascending."""
    out = set()
    for k in range(4):
        for exps in combinations((3, 2, 1, 0), k):
            for cs in product((1, 2, 3), repeat=k):
                out.add(Ordinal(tuple((Ordinal.nat(e), c) for e, c in zip(exps, cs))))
    out.update(ord_parse(t) for t in EXTRA)
    return sorted(out)


def limit_ordinals() -> List[Ordinal]:
    return [a for a in sample_ordinals() if a.is_limit()]
