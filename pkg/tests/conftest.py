import pytest

from agmagma.enumeration import ModelQuery, enumerate_models
from agmagma.laws import ClassLabel


def _models(order, cls, up_to_iso=False):
    return list(enumerate_models(ModelQuery(order, cls, up_to_iso)))


@pytest.fixture(scope="session")
def all_upto3():
    """Every magma of order 1..3, labelled."""
    return [m for n in (1, 2, 3) for m in _models(n, None)]


@pytest.fixture(scope="session")
def ag_order4_iso():
    return _models(4, ClassLabel.AG, up_to_iso=True)


@pytest.fixture(scope="session")
def law_corpus(all_upto3, ag_order4_iso):
    return all_upto3 + ag_order4_iso


@pytest.fixture(scope="session")
def ci_corpus():
    """Completely inverse AG**-groupoids of order 1..4 up to isomorphism."""
    return [m for n in (1, 2, 3, 4)
            for m in _models(n, ClassLabel.COMPLETELY_INVERSE_AG_SS, up_to_iso=True)]


@pytest.fixture(scope="session")
def ci_labelled_upto3():
    return [m for n in (1, 2, 3)
            for m in _models(n, ClassLabel.COMPLETELY_INVERSE_AG_SS)]


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
