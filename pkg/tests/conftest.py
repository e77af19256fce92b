import time

import pytest

from moufang import catalog
from moufang.birep import regular_birepresentation, regular_triple

CRITERIA: dict[int, tuple[str, str, float]] = {}


@pytest.fixture(scope="session")
def S3():
    return catalog.symmetric3()


@pytest.fixture(scope="session")
def Z4():
    return catalog.cyclic(4)


@pytest.fixture(scope="session")
def M():
    """M(S3,2), the order-12 nonassociative Moufang loop."""
    return catalog.chein_double(catalog.symmetric3())


@pytest.fixture(scope="session")
def triple_M(M):
    return regular_triple(M)


@pytest.fixture(scope="session")
def triple_S3(S3):
    return regular_triple(S3)


@pytest.fixture(scope="session")
def triple_Z4(Z4):
    return regular_triple(Z4)


@pytest.fixture(scope="session")
def birep_S3(S3):
    return regular_birepresentation(S3)


@pytest.fixture
def criterion(request):
    """Record a pass/fail line for an acceptance criterion.

    Usage: ``with criterion(3, "derived relations"): ...``
    """
    class _Criterion:
        def __call__(self, number, title):
            self.number, self.title = number, title
            return self

        def __enter__(self):
            self.start = time.perf_counter()
            return self

        def __exit__(self, exc_type, exc, tb):
            status = "PASS" if exc_type is None else "FAIL"
            CRITERIA[self.number] = (self.title, status, time.perf_counter() - self.start)
            return False

    return _Criterion()


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        title, status, secs = CRITERIA[number]
        terminalreporter.write_line(f"criterion {number:>2}: {status}  {title}  ({secs:.2f}s)")
    total = sum(s for _, _, s in CRITERIA.values())
    terminalreporter.write_line(f"total acceptance time: {total:.2f}s")
