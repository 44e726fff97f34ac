import sys

import pytest

from hsstab import kernels
from hsstab.constructions import corpus, enumerate_all


@pytest.fixture(scope="session")
def curated():
    return corpus()


@pytest.fixture(scope="session")
def small_all():
    return [s for n in (1, 2, 3) for s in enumerate_all(n)]


@pytest.fixture(params=kernels.available_backends())
def backend(request):
    """Run a test once per kernel backend."""
    previous = kernels.backend()
    kernels.set_backend(request.param)
    yield request.param
    kernels.set_backend(previous)


def small_corpus(max_order=10):
    return [s for s in corpus().values() if s.order <= max_order]


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(acceptance.RESULTS):
        terminalreporter.write_line(acceptance.line(n))
