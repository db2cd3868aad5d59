import pytest

from fsprune.qpp import QppSpec
from fsprune.trials import make_rng

CRITERIA: list[str] = []


@pytest.fixture
def rng():
    return make_rng(12345)


@pytest.fixture(scope="session")
def paper_qpp():
    return QppSpec(2048, 63, 128, 0)


@pytest.fixture
def criterion():
    """Record one pass/fail line per acceptance criterion."""

    def record(label: str, ok: bool, detail: str = "") -> bool:
        CRITERIA.append(f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else ""))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in CRITERIA:
            terminalreporter.write_line(line)
