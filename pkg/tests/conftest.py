import numpy as np
import pytest

from qdamped.qcore import q_brackets
from qdamped.series import QSeries

_ACCEPTANCE_LINES = []


@pytest.fixture
def report():
    """Record one summary line per acceptance criterion."""

    def _report(label, ok, detail=""):
        _ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}".rstrip())
        return ok

    return _report


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_series(rng, q, order, complex_=False, scaled=False):
    """Random coefficients in [-1, 1]; ``scaled`` divides c_n by [n]_q!."""
    c = rng.uniform(-1, 1, order + 1)
    if complex_:
        c = c + 1j * rng.uniform(-1, 1, order + 1)
    if scaled:
        b = q_brackets(order, q)
        fact = np.cumprod([1.0] + b[1:])
        c = c / fact
    return QSeries(c, q)
