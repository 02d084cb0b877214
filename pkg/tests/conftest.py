import pytest

from hopfcheck.catalog import CATALOG_NAMES, build_algebra


@pytest.fixture(scope="session")
def algebras():
    """All catalog algebras, built once; Peter-Weyl caches accumulate."""
    return {name: build_algebra(name) for name in CATALOG_NAMES}


def pytest_configure(config):
    config.acceptance_lines = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
