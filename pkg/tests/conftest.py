import pytest

from acceptance_report import RESULTS


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        title, outcomes = RESULTS[number]
        status = "PASS" if all(outcomes) else "FAIL"
        terminalreporter.write_line(f"[{status}] AC{number}: {title}")


@pytest.fixture
def rng():
    import numpy as np

    return np.random.default_rng(20240611)
