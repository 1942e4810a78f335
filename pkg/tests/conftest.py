import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gitfan import benchmarks  # noqa: E402

ROOT = Path(__file__).resolve().parent.parent
ACCEPTANCE: list[tuple[str, bool, str]] = []


@pytest.fixture
def a2():
    return benchmarks.a2()


@pytest.fixture
def k2():
    return benchmarks.kronecker()


@pytest.fixture
def s2():
    return benchmarks.s2()


@pytest.fixture
def a3():
    return benchmarks.a3()


@pytest.fixture
def square():
    return benchmarks.square()


@pytest.fixture
def record():
    def _record(criterion: str, passed: bool, detail: str = "") -> None:
        ACCEPTANCE.append((criterion, passed, detail))

    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, passed, detail in ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {criterion}  {detail}")
