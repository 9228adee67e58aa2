import pytest

from ordinal_goodstein.enumerate import GenConfig, gen_terms


@pytest.fixture(scope="session")
def small_terms():
    return gen_terms(GenConfig(max_nodes=5, max_index=2))


def pytest_terminal_summary(terminalreporter):
    from _acceptance_log import LINES
    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(LINES):
            terminalreporter.write_line(line)
