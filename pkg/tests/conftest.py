import pytest

from lapspec.enumeration import EnumerationTask, enumerate_graphs


@pytest.fixture(scope="session")
def bicyclic_pool():
    """Connected graphs with one more edge than vertices, by vertex count.

    Enumeration results are memoized in-process, so suites and tests that
    share a vertex count pay for the pool once.
    """
    def _pool(n: int):
        return enumerate_graphs(EnumerationTask(n, n + 1, connected=True))
    return _pool
