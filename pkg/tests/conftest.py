import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ncubical import fixtures  # noqa: E402


@pytest.fixture(scope="session")
def pentagon_seq():
    return fixtures.pentagon_sequence()


@pytest.fixture(scope="session")
def altshuler_seq():
    return fixtures.altshuler_sequence()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[key])
