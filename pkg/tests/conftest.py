import pytest

from shiftred.freegroup import parse_word
from shiftred.labelings import FinSupport, cyclic


@pytest.fixture
def W2():
    return lambda s: parse_word(s, 2)


@pytest.fixture
def W3():
    return lambda s: parse_word(s, 3)


@pytest.fixture
def two_points():
    """A finite-support point and a Z6-periodic point used by several tests."""
    fin = FinSupport.from_dict(2, 2, 0, {parse_word("ab", 2): 1, parse_word("B", 2): 1})
    per = cyclic(2, 2, 6, (1, 2), (0, 0, 0, 1, 1, 0))
    return fin, per


ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[n])
