import numpy as np
import pytest

from lowdin_rt import uniform_gram


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def g_half():
    return uniform_gram(2, 0.5)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
