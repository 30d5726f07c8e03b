import pytest
from hypothesis import settings

from cosetduality import catalog
from cosetduality.perm import all_subgroups

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(params=catalog.DEFAULT_NAMES)
def catalog_group(request):
    return catalog.get(request.param)


@pytest.fixture
def group_with_all(catalog_group):
    return catalog_group, all_subgroups(catalog_group)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
