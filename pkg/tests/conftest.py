import sys
from functools import lru_cache
from pathlib import Path

import pytest

from blpcalc.corpus import limit_ordinals, sample_ordinals
from blpcalc.ordinal import fs

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(scope="session")
def ordinals():
    return sample_ordinals()


@pytest.fixture(scope="session")
def limits():
    return limit_ordinals()


# -- independent oracles ----------------------------------------------------------


def laver_oracle(n, a, b):
    """The straightforward recursive definition, memoized per call triple."""
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))

    @lru_cache(maxsize=None)
    def l(a, b):
        if a == 2**n:
            return b
        if b == 1:
            return a + 1
        return l(l(a, b - 1), a + 1)

    return l(a, b)


def laver_oracle_table(n):
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))

    @lru_cache(maxsize=None)
    def l(a, b):
        if a == 2**n:
            return b
        if b == 1:
            return a + 1
        return l(l(a, b - 1), a + 1)

    N = 2**n
    return [[l(a, b) for b in range(1, N + 1)] for a in range(1, N + 1)]


def f1_oracle(n):
    """Line-for-line transcription of the reference F1 program."""

    def l(n, a, b):
        if a == 2**n:
            return b
        if b == 1:
            return a + 1
        return l(n, l(n, a, b - 1), a + 1)

    i = 1
    y = n
    while y > 0:
        z = y
        while True:
            w = 1
            for _ in range(i - 1):
                w = l(z, 1, w)
            if l(z, w, 2**y) == 2**z:
                z += 1
            else:
                break
        i += 1
        y = z - 2
    return i


def mh_oracle(a, n):
    """Plain recursion for the m-hierarchy; only for tiny inputs."""
    if a.is_zero():
        return n**n
    if a.is_limit():
        return mh_oracle(fs(a, n), n)
    x = n
    for _ in range(n):
        x = mh_oracle(a.pred(), x)
    return x


def hardy_oracle(a, n):
    # the three defining clauses, with the tail call unrolled
    while not a.is_zero():
        a = a.pred() if a.is_successor() else fs(a, n)
        n += 1
    return n
