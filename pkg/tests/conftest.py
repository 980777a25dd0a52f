import pytest

from cicyg2 import load_corpus
from known import ACCEPTANCE_LINES


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
