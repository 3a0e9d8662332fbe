import time
from contextlib import contextmanager

import pytest

_RESULTS = []


@pytest.fixture
def criterion():
    """Time an acceptance criterion against its budget and record the verdict."""

    @contextmanager
    def run(number: int, title: str, budget: float):
        start = time.perf_counter()
        passed = False
        try:
            yield
            passed = True
        finally:
            elapsed = time.perf_counter() - start
            in_budget = elapsed < budget
            _RESULTS.append((number, title, passed and in_budget, elapsed, budget))
        assert in_budget, f"criterion {number} took {elapsed:.2f}s, budget {budget}s"

    return run


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, elapsed, budget in sorted(_RESULTS):
        verdict = "PASS" if passed else "FAIL"
        terminalreporter.write_line(
            f"{verdict}  {number:>2}. {title}  ({elapsed:.2f}s of {budget:g}s)")
