import sys

import pytest


@pytest.fixture(scope="session")
def cache_dir(tmp_path_factory):
    """One shared cache directory so heavy artifacts are computed once."""
    return str(tmp_path_factory.mktemp("resspec-cache"))


def pytest_terminal_summary(terminalreporter):
    # replay the acceptance PASS lines after the run, outside capture
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "ACCEPTANCE_LINES", None) if mod else None
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
