import mpmath
import pytest
from hypothesis import settings

from hyperstieltjes.core import EvalContext

import oracle_values as ov  # noqa: F401  (re-exported for test modules)

# oracle comparisons are done well above the library's 20 working digits
mpmath.mp.dps = 40

settings.register_profile("default", deadline=None, max_examples=40, derandomize=True)
settings.load_profile("default")


@pytest.fixture(scope="session")
def ctx():
    return EvalContext()


@pytest.fixture(scope="session")
def hi_ctx():
    return EvalContext(tol=1e-25)


def mpf(text):
    """Frozen oracle string to an mpf at 40 digits."""
    with mpmath.workdps(40):
        return mpmath.mpf(text)


def _unwrap(x):
    # ConstantResult -> Real -> mpf
    while hasattr(x, "value") and not isinstance(x, (int, float)):
        x = x.value
    return mpmath.mpf(x)


def close(value, expected, tol):
    v, e = _unwrap(value), _unwrap(expected)
    diff = abs(v - e)
    assert diff <= tol, f"{v} vs {e}: diff {diff} > {tol}"


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
