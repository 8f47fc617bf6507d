import threading

import pytest

from blpcalc.budget import EvalBudget, Exceeded, Value
from blpcalc.feval import Case, canonical_ps, f_eval, f_trace, fire, format_trace, rank_canonical
from blpcalc.figures import figure
from blpcalc.ordinal import OMEGA, ONE, ZERO, Ordinal, mh, ord_parse
from blpcalc.pattern import ZERO_BLP, copyable, delete, expand, modify, named, palpha, parse_figure

SMALL = EvalBudget(max_bits=1 << 12, max_steps=20_000)


@pytest.mark.parametrize("m", range(1, 21))
def test_f_zero(m):
    assert f_eval(ZERO_BLP, m) == Value(m * 2**m)


def test_f_examples():
    assert f_eval(ZERO_BLP, 3) == Value(24)
    assert f_eval(palpha(ONE), 1) == Value(8)
    r = f_eval(palpha(Ordinal.nat(2)), 1, EvalBudget(max_bits=4096))
    assert isinstance(r, Exceeded) and r.reason == "bits"


@pytest.mark.parametrize("a,n", [(0, 1), (0, 2), (0, 3), (0, 4), (1, 1)])
def test_steinhaus_moser_identity(a, n):
    r = f_eval(palpha(Ordinal.nat(a)), n)
    m = mh(Ordinal.nat(a), 2**n)
    assert r.ok and m.ok
    assert 2**r.value == m.value


def test_f_rejects_m_zero():
    with pytest.raises(ValueError):
        f_eval(ZERO_BLP, 0)
    with pytest.raises(ValueError):
        f_trace(ZERO_BLP, 0)


def test_transient_patterns_exceed_small_budget():
    for name in ("p_start", "p_init", "p_BO"):
        r = f_eval(named(name), 1, SMALL)
        assert isinstance(r, Exceeded)
        assert r.steps_done <= SMALL.max_steps


def test_limit_pattern_exceeds():
    assert f_eval(palpha(OMEGA), 1) == Exceeded("bits", 28)


def test_budget_monotone():
    small, big = EvalBudget(max_bits=64, max_steps=100), EvalBudget()
    for p, m in [(ZERO_BLP, 5), (palpha(ONE), 1), (palpha(ZERO), 4)]:
        r = f_eval(p, m, small)
        if r.ok:
            assert f_eval(p, m, big) == r


def test_exceeded_is_deterministic():
    a = f_eval(named("p_start"), 1, SMALL)
    b = f_eval(named("p_start"), 1, SMALL)
    assert a == b


# -- cases and traces ---------------------------------------------------------------------------


def test_fire_order():
    assert fire(ZERO_BLP) is Case.ZERO
    assert fire(figure("copy_ex2_copied")) is Case.NON_COPYABLE_DEL
    assert fire(palpha(ONE)) is Case.SUCCESSOR
    assert fire(palpha(OMEGA)) is Case.LIMIT
    assert fire(named("p_start")) is Case.TRANSIENT


def test_trace_zero():
    steps = f_trace(ZERO_BLP, 2)
    assert [(s.index, s.case, s.pattern_length, s.note) for s in steps] == [(1, Case.ZERO, 2, "2·2^2")]
    assert format_trace(steps) == "1. ZERO n=2 2·2^2"


def test_trace_starts():
    t = f_trace(palpha(OMEGA), 1)
    assert (t[0].index, t[0].case, t[0].pattern_length, t[0].note) == (1, Case.LIMIT, 4, "E(1)")
    assert f_trace(named("p_start"), 1, 5)[0].case is Case.TRANSIENT


def test_trace_truncation_and_determinism():
    a = f_trace(named("p_init"), 1, 40)
    assert len(a) == 40
    assert a == f_trace(named("p_init"), 1, 40)


def walk(p, m, k):
    """Patterns visited by the first ``k`` trace steps."""
    seen = []
    for _ in range(k):
        seen.append(p)
        case = fire(p)
        if case is Case.ZERO:
            break
        if case in (Case.NON_COPYABLE_DEL, Case.SUCCESSOR):
            p = delete(p)
        elif case is Case.LIMIT:
            p = expand(p, m)
        else:
            p = modify(p)
    return seen


def test_trace_case_shield():
    # successor/limit/transient are never reported for a non-copyable pattern
    for name in ("p_start", "p_init", "p_BO", "copy_ex2_copied", "p_prime", "p_eps0"):
        seen = walk(figure(name), 1, 60)
        steps = f_trace(figure(name), 1, 60)
        assert [s.pattern_length for s in steps] == [q.n for q in seen]
        for q, step in zip(seen, steps):
            assert step.case is fire(q)
            if step.case in (Case.SUCCESSOR, Case.LIMIT, Case.TRANSIENT):
                assert copyable(q)
    assert f_trace(figure("copy_ex2_copied"), 1, 1)[0].case is Case.NON_COPYABLE_DEL


# -- rank ----------------------------------------------------------------------------------------------------


def test_rank_examples():
    assert rank_canonical(ZERO_BLP) == ZERO
    assert rank_canonical(figure("p_prime")) == ord_parse("w+2")
    assert rank_canonical(named("p_start")) is None


def test_rank_inverts_palpha(ordinals):
    for a in ordinals:
        assert rank_canonical(palpha(a)) == a


def test_rank_rejects_template_lookalikes():
    # row 5 fits the template but (0,0,1) is not a pattern sequence
    p = parse_figure("0,1,2,-1,0,1,2,3,-1,0,1,2,3,4,-2,0,1,2,4,5,-2,0,1,2,3,5,6,-3")
    assert canonical_ps(p) == (0, 0, 1)
    assert rank_canonical(p) is None


def test_concurrent_evaluation():
    out = []

    def work():
        out.append(f_eval(palpha(ONE), 1))

    ts = [threading.Thread(target=work) for _ in range(6)]
    for t in ts:
        t.start()
    for t in ts:
        t.join()
    assert out == [Value(8)] * 6
