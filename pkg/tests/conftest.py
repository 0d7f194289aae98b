import time

import pytest

_ACCEPTANCE: list[str] = []


class _Recorder:
    """Times one acceptance criterion and records a PASS/FAIL line for it."""

    def __init__(self, name: str, budget: float | None):
        self.name = name
        self.budget = budget
        self.start = time.perf_counter()

    def finish(self, ok: bool, detail: str = "") -> None:
        elapsed = time.perf_counter() - self.start
        in_budget = self.budget is None or elapsed < self.budget
        verdict = "PASS" if ok and in_budget else "FAIL"
        limit = f" (budget {self.budget:g}s)" if self.budget is not None else ""
        note = f"  {detail}" if detail else ""
        line = f"{verdict}  {self.name}  [{elapsed:.2f}s{limit}]{note}"
        _ACCEPTANCE.append(line)
        print(line)
        assert ok, f"{self.name}: {detail}"
        assert in_budget, f"{self.name}: {elapsed:.1f}s exceeds {self.budget}s"


@pytest.fixture
def criterion():
    return _Recorder


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
