import pytest

from mirrorbounce.field import make_mirror_field


@pytest.fixture
def mirror():
    """The reference trap: B0 = 1, a = 0.01, R = 1.04, so z_m = 2."""
    return make_mirror_field(1.0, 0.01, 1.04)


@pytest.fixture
def flat():
    return make_mirror_field(1.0, 0.0, 1.0)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s[7:9])):
            terminalreporter.write_line(line)
