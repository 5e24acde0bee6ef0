import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

FIXTURES = Path(__file__).parent.parent / "fixtures"
_criteria = []


@pytest.fixture
def criterion():
    """Record one acceptance line; they are echoed in the terminal summary."""
    def record(name, passed, detail=""):
        _criteria.append((name, passed, detail))
        return passed
    return record


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in _criteria:
        mark = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"{mark}  {name}" + (f"  ({detail})" if detail else ""))
