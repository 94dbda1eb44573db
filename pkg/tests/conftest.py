import numpy as np
import pytest

from rogersim import SimParams

ACCEPTANCE_RESULTS = {}


def record_criterion(number: int, ok: bool, detail: str) -> None:
    ACCEPTANCE_RESULTS[number] = (bool(ok), detail)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[n]
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"criterion {n:2d}: {status}  {detail}")


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def baseline():
    """Default scenario values at a test-friendly scale."""
    return SimParams(t_total=20_000, equilibrium_window=5_000, seed=42)
