import functools

import pytest

from grouplab.catalog import builtin, builtin_catalog


@functools.lru_cache(maxsize=None)
def group(name):
    return builtin(name)


@functools.lru_cache(maxsize=None)
def catalog_groups():
    return tuple(e.build() for e in builtin_catalog())


def small_catalog(limit):
    return [G for G in catalog_groups() if G.order <= limit]


@pytest.fixture
def S3():
    return group("symmetric3")


@pytest.fixture
def S4():
    return group("symmetric4")


@pytest.fixture
def A4():
    return group("alternating4")


@pytest.fixture
def Q8():
    return group("quaternion8")


@pytest.fixture(scope="session")
def fixture216():
    return group("smallgroup216_153")



ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
