"""Each deliberate semantic flip must be caught by the figure checks."""

import pytest

from blpcalc import pattern
from blpcalc.verify import FAULTS, fault, fault_checks, figure_checks

EXPECTED = {
    "m-row-source": {"1d M.M"},
    "comp-step-index": {"1b fullcomp", "1d M.M"},
    "empty-T": {"1d M.M"},
    "ap-third-clause": {"1a copy_ex1", "1c E(2)"},
}


def failing():
    return {c.name for c in figure_checks() if not c.passed}


@pytest.fixture(scope="module")
def baseline():
    return failing()


def test_every_fault_has_expectations():
    assert set(EXPECTED) == set(FAULTS)


@pytest.mark.parametrize("name", sorted(FAULTS))
def test_fault_is_detected(name, baseline):
    with fault(name):
        broken = failing() - baseline
    assert EXPECTED[name] <= broken


@pytest.mark.parametrize("name", sorted(FAULTS))
def test_fault_is_undone(name, baseline):
    attr = FAULTS[name][0]
    before = getattr(pattern, attr)
    with fault(name):
        assert getattr(pattern, attr) is not before
    assert getattr(pattern, attr) is before
    assert failing() == baseline


def test_fault_restored_after_error():
    before = pattern._m_rows
    with pytest.raises(RuntimeError):
        with fault("m-row-source"):
            raise RuntimeError
    assert pattern._m_rows is before


def test_fault_checks_all_pass():
    checks = fault_checks()
    assert len(checks) == len(FAULTS)
    assert all(c.passed for c in checks), [c.line() for c in checks if not c.passed]
