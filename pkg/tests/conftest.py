import json
from pathlib import Path

import pytest

GOLDEN = Path(__file__).parent / "golden"

# criterion label -> "PASS" / "FAIL", filled by test_acceptance
ACCEPTANCE = {}


@pytest.fixture
def golden():
    def read(name):
        text = (GOLDEN / name).read_text()
        return json.loads(text) if name.endswith(".json") else text
    return read


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"{ACCEPTANCE[label]}  {label}")
